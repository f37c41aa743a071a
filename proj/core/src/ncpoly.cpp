#include "qnss/ncpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace qnss {

NCWord NCWord::concat(const NCWord& rhs) const {
  NCWord out;
  out.coeffs = coeffs;
  out.coeffs.back() = out.coeffs.back() * rhs.coeffs.front();
  out.coeffs.insert(out.coeffs.end(), rhs.coeffs.begin() + 1, rhs.coeffs.end());
  out.vars = vars;
  out.vars.insert(out.vars.end(), rhs.vars.begin(), rhs.vars.end());
  return out;
}

Quaternion NCWord::evaluate(std::span<const Quaternion> point) const {
  Quaternion acc = coeffs.front();
  for (std::size_t t = 0; t < vars.size(); ++t) {
    int v = vars[t];
    if (v < 0 || static_cast<std::size_t>(v) >= point.size())
      throw std::invalid_argument("point dimension mismatch");
    acc = acc * point[v] * coeffs[t + 1];
  }
  return acc;
}

bool operator<(const NCWord& x, const NCWord& y) {
  if (x.vars.size() != y.vars.size()) return x.vars.size() < y.vars.size();
  if (x.vars != y.vars) return x.vars < y.vars;
  auto key = [](const Quaternion& q) {
    return std::array<Rat, 4>{q.a(), q.b(), q.c(), q.d()};
  };
  for (std::size_t t = 0; t < x.coeffs.size(); ++t) {
    auto kx = key(x.coeffs[t]);
    auto ky = key(y.coeffs[t]);
    if (kx != ky) return kx < ky;
  }
  return false;
}

namespace {

QPoly phi_of_word(const NCWord& w, int nvars) {
  const int cn = 4 * nvars;
  QPoly acc = QPoly::constant(cn, w.coeffs.front());
  for (std::size_t t = 0; t < w.vars.size(); ++t) {
    int v = w.vars[t];
    if (v < 0 || v >= nvars) throw std::invalid_argument("variable index out of range");
    // phi(x_v) = y_{v,1} + y_{v,2} i + y_{v,3} j + y_{v,4} k
    QPoly img(Poly::variable(cn, 4 * v + 0), Poly::variable(cn, 4 * v + 1),
              Poly::variable(cn, 4 * v + 2), Poly::variable(cn, 4 * v + 3));
    acc = acc * img;
    acc = acc * QPoly::constant(cn, w.coeffs[t + 1]);
  }
  return acc;
}

std::vector<NCWord> prune_words(std::vector<NCWord> words) {
  std::vector<NCWord> out;
  for (auto& w : words) {
    bool zero = false;
    for (const auto& q : w.coeffs)
      if (q.is_zero()) zero = true;
    if (!zero) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

NCPoly::NCPoly(int nvars) : nvars_(nvars), canon_(4 * nvars) {}

NCPoly::NCPoly(int nvars, std::vector<NCWord> words)
    : nvars_(nvars), words_(prune_words(std::move(words))), canon_(4 * nvars) {
  for (const auto& w : words_) {
    if (w.coeffs.size() != w.vars.size() + 1)
      throw std::invalid_argument("malformed word");
    canon_ += phi_of_word(w, nvars_);
  }
}

NCPoly NCPoly::constant(int nvars, const Quaternion& q) {
  return NCPoly(nvars, {NCWord::constant(q)});
}

NCPoly NCPoly::variable(int nvars, int var) {
  if (var < 0 || var >= nvars) throw std::invalid_argument("variable index out of range");
  return NCPoly(nvars, {NCWord::variable(var)});
}

NCPoly NCPoly::operator-() const {
  std::vector<NCWord> words = words_;
  for (auto& w : words) w.coeffs.front() = -w.coeffs.front();
  return NCPoly(nvars_, std::move(words));
}

NCPoly NCPoly::operator+(const NCPoly& rhs) const {
  if (nvars_ != rhs.nvars_) throw std::invalid_argument("variable count mismatch");
  std::vector<NCWord> words = words_;
  words.insert(words.end(), rhs.words_.begin(), rhs.words_.end());
  return NCPoly(nvars_, std::move(words));
}

NCPoly NCPoly::operator-(const NCPoly& rhs) const { return *this + (-rhs); }

NCPoly NCPoly::operator*(const NCPoly& rhs) const {
  if (nvars_ != rhs.nvars_) throw std::invalid_argument("variable count mismatch");
  std::vector<NCWord> words;
  for (const auto& w1 : words_)
    for (const auto& w2 : rhs.words_) words.push_back(w1.concat(w2));
  return NCPoly(nvars_, std::move(words));
}

NCPoly NCPoly::conjugate() const {
  const NCPoly qi = NCPoly::constant(nvars_, Quaternion::i());
  const NCPoly qj = NCPoly::constant(nvars_, Quaternion::j());
  const NCPoly qk = NCPoly::constant(nvars_, Quaternion::k());
  const NCPoly& f = *this;
  NCPoly sum = f + qi * f * qi + qj * f * qj + qk * f * qk;
  NCPoly half = NCPoly::constant(nvars_, Quaternion(Rat(-1, 2)));
  return half * sum;
}

Quaternion NCPoly::evaluate(std::span<const Quaternion> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("point dimension mismatch");
  Quaternion acc;
  for (const auto& w : words_) acc += w.evaluate(point);
  return acc;
}

QPoly phi(const NCPoly& f) { return f.canon(); }

std::vector<Rat> rho(std::span<const Quaternion> point) {
  std::vector<Rat> out;
  out.reserve(4 * point.size());
  for (const auto& q : point) {
    out.push_back(q.a());
    out.push_back(q.b());
    out.push_back(q.c());
    out.push_back(q.d());
  }
  return out;
}

}  // namespace qnss
