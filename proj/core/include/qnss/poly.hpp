#pragma once

#include <map>
#include <span>
#include <vector>

#include "qnss/monomial.hpp"
#include "qnss/rational.hpp"

namespace qnss {

/// Sparse multivariate polynomial over Q in a fixed number of variables.
/// The term map is canonical: equal polynomials have identical maps.
class Poly {
 public:
  explicit Poly(int nvars = 0) : nvars_(nvars) {}
  static Poly constant(int nvars, const Rat& c);
  static Poly variable(int nvars, int var);
  static Poly term(int nvars, Monomial m, const Rat& c);

  int nvars() const { return nvars_; }
  const std::map<Monomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree() const;  // total degree; -1 for the zero polynomial
  const Rat& coeff(const Monomial& m) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly operator*(const Poly& rhs) const;
  Poly operator*(const Rat& s) const;
  Poly mul_term(const Monomial& m, const Rat& c) const;
  Poly pow(int e) const;

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }

  Rat evaluate(std::span<const Rat> point) const;

  /// Same polynomial read in a ring with more variables (appended last).
  Poly with_nvars(int nvars) const;

  void add_term(const Monomial& m, const Rat& c);  // accumulate, dropping zeros

  friend bool operator==(const Poly& x, const Poly& y) {
    return x.nvars_ == y.nvars_ && x.terms_ == y.terms_;
  }

 private:
  int nvars_;
  std::map<Monomial, Rat> terms_;
};

}  // namespace qnss
