#include "qnss/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qnss {

Monomial::Monomial(std::vector<std::pair<int, int>> exps) : exps_(std::move(exps)) {
  std::sort(exps_.begin(), exps_.end());
  std::vector<std::pair<int, int>> merged;
  for (const auto& [v, e] : exps_) {
    if (v < 0) throw std::invalid_argument("negative variable index");
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e == 0) continue;
    if (!merged.empty() && merged.back().first == v) {
      merged.back().second += e;
    } else {
      merged.emplace_back(v, e);
    }
  }
  exps_ = std::move(merged);
  degree_ = 0;
  for (const auto& [v, e] : exps_) degree_ += e;
}

Monomial Monomial::variable(int var, int exp) { return Monomial({{var, exp}}); }

int Monomial::exponent(int var) const {
  for (const auto& [v, e] : exps_)
    if (v == var) return e;
  return 0;
}

int Monomial::degree_in(int lo, int hi) const {
  int deg = 0;
  for (const auto& [v, e] : exps_)
    if (v >= lo && v < hi) deg += e;
  return deg;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  std::vector<std::pair<int, int>> out;
  auto it = exps_.begin();
  auto jt = rhs.exps_.begin();
  while (it != exps_.end() || jt != rhs.exps_.end()) {
    if (jt == rhs.exps_.end() || (it != exps_.end() && it->first < jt->first)) {
      out.push_back(*it++);
    } else if (it == exps_.end() || jt->first < it->first) {
      out.push_back(*jt++);
    } else {
      out.emplace_back(it->first, it->second + jt->second);
      ++it;
      ++jt;
    }
  }
  Monomial m;
  m.exps_ = std::move(out);
  m.degree_ = degree_ + rhs.degree_;
  return m;
}

bool Monomial::divides(const Monomial& divisor_of) const {
  auto it = divisor_of.exps_.begin();
  for (const auto& [v, e] : exps_) {
    while (it != divisor_of.exps_.end() && it->first < v) ++it;
    if (it == divisor_of.exps_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::divide(const Monomial& divisor) const {
  std::vector<std::pair<int, int>> out;
  auto jt = divisor.exps_.begin();
  for (const auto& [v, e] : exps_) {
    int sub = 0;
    while (jt != divisor.exps_.end() && jt->first < v) {
      throw std::invalid_argument("monomial division is not exact");
    }
    if (jt != divisor.exps_.end() && jt->first == v) {
      sub = jt->second;
      ++jt;
    }
    if (e < sub) throw std::invalid_argument("monomial division is not exact");
    if (e > sub) out.emplace_back(v, e - sub);
  }
  if (jt != divisor.exps_.end()) throw std::invalid_argument("monomial division is not exact");
  Monomial m;
  m.exps_ = std::move(out);
  m.degree_ = degree_ - divisor.degree_;
  return m;
}

int mono_cmp(const Monomial& a, const Monomial& b, MonoOrderKind kind, int lo, int hi) {
  if (kind != MonoOrderKind::Lex) {
    int da = a.degree_in(lo, hi);
    int db = b.degree_in(lo, hi);
    if (da != db) return da < db ? -1 : 1;
  }
  if (kind == MonoOrderKind::DegRevLex) {
    // Larger monomial has the smaller exponent at the last variable
    // where the restrictions differ.
    for (int v = hi - 1; v >= lo; --v) {
      int ea = a.exponent(v);
      int eb = b.exponent(v);
      if (ea != eb) return ea > eb ? -1 : 1;
    }
    return 0;
  }
  for (int v = lo; v < hi; ++v) {
    int ea = a.exponent(v);
    int eb = b.exponent(v);
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return 0;
}

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(Monomial(), c);
  return p;
}

Poly Poly::variable(int nvars, int var) {
  if (var < 0 || var >= nvars) throw std::invalid_argument("variable index out of range");
  Poly p(nvars);
  p.add_term(Monomial::variable(var), Rat(1));
  return p;
}

Poly Poly::term(int nvars, Monomial m, const Rat& c) {
  if (m.max_var() >= nvars) throw std::invalid_argument("variable index out of range");
  Poly p(nvars);
  p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Poly::degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.degree());
  return deg;
}

const Rat& Poly::coeff(const Monomial& m) const {
  static const Rat zero(0);
  auto it = terms_.find(m);
  return it == terms_.end() ? zero : it->second;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (rat_is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (rat_is_zero(it->second)) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly p(nvars_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (nvars_ != rhs.nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (nvars_ != rhs.nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator*(const Poly& rhs) const {
  if (nvars_ != rhs.nvars_) throw std::invalid_argument("variable count mismatch");
  Poly p(nvars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : rhs.terms_) p.add_term(m1 * m2, c1 * c2);
  return p;
}

Poly Poly::operator*(const Rat& s) const {
  Poly p(nvars_);
  if (rat_is_zero(s)) return p;
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, c * s);
  return p;
}

Poly Poly::mul_term(const Monomial& m, const Rat& c) const {
  Poly p(nvars_);
  if (rat_is_zero(c)) return p;
  for (const auto& [tm, tc] : terms_) p.terms_.emplace(tm * m, tc * c);
  return p;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Poly acc = Poly::constant(nvars_, Rat(1));
  for (int t = 0; t < e; ++t) acc = acc * *this;
  return acc;
}

Rat Poly::evaluate(std::span<const Rat> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("point dimension mismatch");
  Rat acc(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (const auto& [v, e] : m.exps()) {
      Rat p(1);
      for (int q = 0; q < e; ++q) p *= point[v];
      t *= p;
    }
    acc += t;
  }
  return acc;
}

Poly Poly::with_nvars(int nvars) const {
  if (nvars < nvars_) {
    for (const auto& [m, c] : terms_)
      if (m.max_var() >= nvars) throw std::invalid_argument("cannot shrink variable count");
  }
  Poly p(nvars);
  p.terms_ = terms_;
  return p;
}

}  // namespace qnss
