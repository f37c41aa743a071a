#pragma once

#include <span>
#include <vector>

#include "qnss/qpoly.hpp"
#include "qnss/quaternion.hpp"

namespace qnss {

/// One word of the free algebra H<x1..xd>: quaternion coefficients
/// interleaved with variable letters, q0 x_{i1} q1 ... x_{im} qm.
/// coeffs.size() == vars.size() + 1 always.
struct NCWord {
  std::vector<Quaternion> coeffs;
  std::vector<int> vars;

  static NCWord constant(const Quaternion& q) { return {{q}, {}}; }
  static NCWord variable(int var) { return {{Quaternion::one(), Quaternion::one()}, {var}}; }

  NCWord concat(const NCWord& rhs) const;
  Quaternion evaluate(std::span<const Quaternion> point) const;

  friend bool operator==(const NCWord& x, const NCWord& y) {
    return x.coeffs == y.coeffs && x.vars == y.vars;
  }
  friend bool operator<(const NCWord& x, const NCWord& y);
};

/// Element of H[x1..xd], the ring of polynomial functions H^d -> H.
/// Stored as a formal sum of raw words plus its canonical form: the
/// image under the isomorphism phi into H_c[y_{1,1}..y_{d,4}],
/// x_i |-> y_{i,1} + y_{i,2} i + y_{i,3} j + y_{i,4} k. Two elements are
/// equal iff their canonical forms are; the canon is computed at
/// construction, so values are immutable and freely shareable.
class NCPoly {
 public:
  explicit NCPoly(int nvars = 0);
  NCPoly(int nvars, std::vector<NCWord> words);
  static NCPoly constant(int nvars, const Quaternion& q);
  static NCPoly variable(int nvars, int var);

  int nvars() const { return nvars_; }
  const std::vector<NCWord>& words() const { return words_; }
  /// The phi-image: a QPoly in 4*nvars variables y_{i,s}, s = 1..4 in
  /// basis order (1, i, j, k), variable index 4*(i-1) + (s-1).
  const QPoly& canon() const { return canon_; }

  bool is_zero() const { return canon_.is_zero(); }

  NCPoly operator-() const;
  NCPoly operator+(const NCPoly& rhs) const;
  NCPoly operator-(const NCPoly& rhs) const;
  NCPoly operator*(const NCPoly& rhs) const;

  /// Pointwise conjugate, computed exactly as -1/2 (f + ifi + jfj + kfk)
  /// by ring operations on raw words.
  NCPoly conjugate() const;
  /// The involution of H[x] is the pointwise conjugation.
  NCPoly involute() const { return conjugate(); }

  /// Substitution of quaternion coordinates into the raw words, with
  /// noncommutative products. Satisfies evaluate(a) ==
  /// canon().evaluate(rho(a)).
  Quaternion evaluate(std::span<const Quaternion> point) const;

  /// Equality as functions H^d -> H (canonical forms agree).
  friend bool operator==(const NCPoly& x, const NCPoly& y) {
    return x.nvars_ == y.nvars_ && x.canon_ == y.canon_;
  }

 private:
  int nvars_;
  std::vector<NCWord> words_;
  QPoly canon_;
};

/// phi(f): the canonical QPoly image in 4d variables.
QPoly phi(const NCPoly& f);

/// rho: H^d -> Q^{4d}, concatenating components in basis order.
std::vector<Rat> rho(std::span<const Quaternion> point);

}  // namespace qnss
