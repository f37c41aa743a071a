#include "qnss/qpoly.hpp"

#include <stdexcept>

namespace qnss {

namespace {

// Hamilton table on basis indices 0..3 = (1, i, j, k): e_s * e_t.
constexpr int kMulIdx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
constexpr int kMulSgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};

}  // namespace

QPoly::QPoly(int nvars)
    : nvars_(nvars), comp_{Poly(nvars), Poly(nvars), Poly(nvars), Poly(nvars)} {}

QPoly::QPoly(Poly c1, Poly c2, Poly c3, Poly c4)
    : nvars_(c1.nvars()), comp_{std::move(c1), std::move(c2), std::move(c3), std::move(c4)} {
  for (const Poly& c : comp_) {
    if (c.nvars() != nvars_) throw std::invalid_argument("variable count mismatch");
  }
}

QPoly QPoly::from_poly(const Poly& p) {
  return QPoly(p, Poly(p.nvars()), Poly(p.nvars()), Poly(p.nvars()));
}

QPoly QPoly::constant(int nvars, const Quaternion& q) {
  return QPoly(Poly::constant(nvars, q.a()), Poly::constant(nvars, q.b()),
               Poly::constant(nvars, q.c()), Poly::constant(nvars, q.d()));
}

QPoly QPoly::variable(int nvars, int var) {
  QPoly f(nvars);
  f.comp_[0] = Poly::variable(nvars, var);
  return f;
}

const Poly& QPoly::comp(int index) const {
  if (index < 1 || index > 4) throw std::invalid_argument("component index must be 1..4");
  return comp_[index - 1];
}

bool QPoly::is_zero() const {
  return comp_[0].is_zero() && comp_[1].is_zero() && comp_[2].is_zero() && comp_[3].is_zero();
}

bool QPoly::is_rational() const {
  return comp_[1].is_zero() && comp_[2].is_zero() && comp_[3].is_zero();
}

int QPoly::degree() const {
  int deg = -1;
  for (const Poly& c : comp_) deg = std::max(deg, c.degree());
  return deg;
}

QPoly QPoly::component_by_ring_ops(int index) const {
  if (index < 1 || index > 4) throw std::invalid_argument("component index must be 1..4");
  const QPoly qi = QPoly::constant(nvars_, Quaternion::i());
  const QPoly qj = QPoly::constant(nvars_, Quaternion::j());
  const QPoly qk = QPoly::constant(nvars_, Quaternion::k());
  QPoly shifted =
      QPoly::constant(nvars_, Quaternion::unit(index).conjugate()) * *this;
  QPoly sum = shifted - qi * shifted * qi - qj * shifted * qj - qk * shifted * qk;
  return sum * Rat(1, 4);
}

QPoly QPoly::involute() const {
  return QPoly(comp_[0], -comp_[1], -comp_[2], -comp_[3]);
}

QPoly QPoly::operator-() const {
  return QPoly(-comp_[0], -comp_[1], -comp_[2], -comp_[3]);
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (nvars_ != rhs.nvars_) throw std::invalid_argument("variable count mismatch");
  for (int s = 0; s < 4; ++s) comp_[s] += rhs.comp_[s];
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (nvars_ != rhs.nvars_) throw std::invalid_argument("variable count mismatch");
  for (int s = 0; s < 4; ++s) comp_[s] -= rhs.comp_[s];
  return *this;
}

QPoly QPoly::operator*(const QPoly& rhs) const {
  if (nvars_ != rhs.nvars_) throw std::invalid_argument("variable count mismatch");
  QPoly out(nvars_);
  for (int s = 0; s < 4; ++s) {
    if (comp_[s].is_zero()) continue;
    for (int t = 0; t < 4; ++t) {
      if (rhs.comp_[t].is_zero()) continue;
      Poly prod = comp_[s] * rhs.comp_[t];
      if (kMulSgn[s][t] < 0) prod = -prod;
      out.comp_[kMulIdx[s][t]] += prod;
    }
  }
  return out;
}

QPoly QPoly::operator*(const Rat& s) const {
  return QPoly(comp_[0] * s, comp_[1] * s, comp_[2] * s, comp_[3] * s);
}

Quaternion QPoly::evaluate(std::span<const Rat> point) const {
  return Quaternion(comp_[0].evaluate(point), comp_[1].evaluate(point),
                    comp_[2].evaluate(point), comp_[3].evaluate(point));
}

QPoly QPoly::with_nvars(int nvars) const {
  return QPoly(comp_[0].with_nvars(nvars), comp_[1].with_nvars(nvars),
               comp_[2].with_nvars(nvars), comp_[3].with_nvars(nvars));
}

}  // namespace qnss
