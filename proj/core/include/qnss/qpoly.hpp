#pragma once

#include <array>
#include <span>

#include "qnss/poly.hpp"
#include "qnss/quaternion.hpp"

namespace qnss {

/// Quaternionic polynomial with central variables: an element of
/// H tensor Q[x1..xd], stored as four rational components
/// c1 + c2 i + c3 j + c4 k. The involution fixes variables and
/// conjugates coefficients.
class QPoly {
 public:
  explicit QPoly(int nvars = 0);
  QPoly(Poly c1, Poly c2, Poly c3, Poly c4);
  static QPoly from_poly(const Poly& p);  // scalar embedding
  static QPoly constant(int nvars, const Quaternion& q);
  static QPoly variable(int nvars, int var);

  int nvars() const { return nvars_; }
  const Poly& comp(int index) const;  // 1..4 in basis order (1,i,j,k)
  const std::array<Poly, 4>& comps() const { return comp_; }

  bool is_zero() const;
  bool is_rational() const;  // i, j, k parts all zero
  int degree() const;

  /// The four components (c1, c2, c3, c4); recomposition is the identity.
  std::array<Poly, 4> decompose() const { return comp_; }
  /// The index-th component computed through two-sided unit
  /// multiplications in the ring itself, never by reading fields. Agrees
  /// with decompose(); kept as an independently checkable route.
  QPoly component_by_ring_ops(int index) const;

  QPoly involute() const;  // (fg)* = g* f*, fixes variables
  QPoly operator-() const;
  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly operator*(const QPoly& rhs) const;
  QPoly operator*(const Rat& s) const;

  friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
  friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }

  Quaternion evaluate(std::span<const Rat> point) const;

  QPoly with_nvars(int nvars) const;

  friend bool operator==(const QPoly& x, const QPoly& y) {
    return x.nvars_ == y.nvars_ && x.comp_ == y.comp_;
  }

 private:
  int nvars_;
  std::array<Poly, 4> comp_;
};

}  // namespace qnss
