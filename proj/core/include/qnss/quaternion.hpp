#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "qnss/rational.hpp"

namespace qnss {

/// Element of the quaternion algebra H over Q, components in the ordered
/// basis (1, i, j, k) with ij = k.
class Quaternion {
 public:
  Quaternion() : a_(0), b_(0), c_(0), d_(0) {}
  Quaternion(Rat a, Rat b, Rat c, Rat d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}
  explicit Quaternion(Rat scalar) : a_(std::move(scalar)), b_(0), c_(0), d_(0) {}
  explicit Quaternion(long scalar) : a_(scalar), b_(0), c_(0), d_(0) {}

  static Quaternion zero() { return Quaternion(); }
  static Quaternion one() { return Quaternion(Rat(1)); }
  static Quaternion i() { return Quaternion(Rat(0), Rat(1), Rat(0), Rat(0)); }
  static Quaternion j() { return Quaternion(Rat(0), Rat(0), Rat(1), Rat(0)); }
  static Quaternion k() { return Quaternion(Rat(0), Rat(0), Rat(0), Rat(1)); }

  /// Basis element 1, i, j, k for index 1..4.
  static Quaternion unit(int index);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }
  const Rat& d() const { return d_; }

  /// Component in basis order (1, i, j, k), index 1..4, by field access.
  const Rat& component(int index) const;

  bool is_zero() const;
  bool is_real() const { return rat_is_zero(b_) && rat_is_zero(c_) && rat_is_zero(d_); }

  Quaternion conjugate() const { return Quaternion(a_, -b_, -c_, -d_); }
  /// q * conj(q) as a rational; nonnegative, zero iff q == 0.
  Rat norm() const { return a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_; }
  /// Two-sided inverse conj(q)/norm(q); throws on zero.
  Quaternion inverse() const;

  Quaternion operator-() const { return Quaternion(-a_, -b_, -c_, -d_); }
  Quaternion& operator+=(const Quaternion& rhs);
  Quaternion& operator-=(const Quaternion& rhs);
  Quaternion& operator*=(const Quaternion& rhs);

  friend Quaternion operator+(Quaternion lhs, const Quaternion& rhs) { return lhs += rhs; }
  friend Quaternion operator-(Quaternion lhs, const Quaternion& rhs) { return lhs -= rhs; }
  friend Quaternion operator*(Quaternion lhs, const Quaternion& rhs) { return lhs *= rhs; }
  friend Quaternion operator*(const Rat& s, const Quaternion& q) {
    return Quaternion(s * q.a_, s * q.b_, s * q.c_, s * q.d_);
  }
  friend Quaternion operator*(const Quaternion& q, const Rat& s) { return s * q; }

  friend bool operator==(const Quaternion& x, const Quaternion& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator!=(const Quaternion& x, const Quaternion& y) { return !(x == y); }

 private:
  Rat a_, b_, c_, d_;
};

/// Component extraction through ring operations only: the index-th
/// coefficient of w is recovered as the scalar part of u_index * w, where
/// the scalar part itself is computed as (z - izi - jzj - kzk)/4. No
/// direct field access is involved until the final (provably scalar)
/// value is read off.
Rat component_extract(const Quaternion& w, int index);

std::string to_string(const Quaternion& q);
std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace qnss
