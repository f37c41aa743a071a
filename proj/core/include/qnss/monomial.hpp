#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace qnss {

enum class MonoOrderKind { Lex, DegLex, DegRevLex };

/// Power product of commuting variables, stored sparsely as sorted
/// (variable index, positive exponent) pairs.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<int, int>> exps);
  static Monomial variable(int var, int exp = 1);

  const std::vector<std::pair<int, int>>& exps() const { return exps_; }
  int degree() const { return degree_; }
  int exponent(int var) const;
  bool is_one() const { return exps_.empty(); }
  int max_var() const { return exps_.empty() ? -1 : exps_.back().first; }

  /// Total degree counting only variables in [lo, hi).
  int degree_in(int lo, int hi) const;

  Monomial operator*(const Monomial& rhs) const;
  bool divides(const Monomial& divisor_of) const;  // this | divisor_of
  Monomial divide(const Monomial& divisor) const;  // this / divisor

  // Structural ordering for canonical term-map storage; unrelated to the
  // monomial orders used by Groebner computations.
  friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
    return x.exps_ <=> y.exps_;
  }
  friend bool operator==(const Monomial& x, const Monomial& y) { return x.exps_ == y.exps_; }

 private:
  std::vector<std::pair<int, int>> exps_;
  int degree_ = 0;
};

/// Three-way comparison of monomials restricted to the variable window
/// [lo, hi): negative if a < b, zero if the restrictions agree, positive
/// if a > b. Used directly for term orders and blockwise for elimination
/// orders.
int mono_cmp(const Monomial& a, const Monomial& b, MonoOrderKind kind, int lo, int hi);

}  // namespace qnss
