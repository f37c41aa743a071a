#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qnss/qpoly.hpp"
#include "qnss/quat_linalg.hpp"

namespace qnss {

using PRow = std::vector<Poly>;   // row vector over Q[x]
using QRow = std::vector<QPoly>;  // row vector over H_c[x]

/// Module monomial order: position-over-term with a configurable term
/// order, lower position index first. An optional trailing variable
/// block can be made dominant for elimination computations.
struct ModuleOrder {
  MonoOrderKind term_order = MonoOrderKind::DegRevLex;
  int elim_split = -1;  // variables with index >= elim_split dominate everything
};

struct ModTerm {
  int pos = -1;
  Monomial mon;
};

/// Finitely generated submodule of Q[x1..xd]^rank with a reduced, hence
/// canonical, Groebner basis computed at construction (Buchberger for
/// modules). Values are immutable afterwards and safe to share across
/// threads.
class PModule {
 public:
  PModule(int nvars, int rank, std::vector<PRow> generators, ModuleOrder order = {});

  int nvars() const { return nvars_; }
  int rank() const { return rank_; }
  const ModuleOrder& order() const { return order_; }
  const std::vector<PRow>& generators() const { return gens_; }
  /// Reduced Groebner basis, monic, sorted by decreasing leading term.
  const std::vector<PRow>& basis() const { return basis_; }

  /// Full normal form; zero iff the row belongs to the module.
  PRow normal_form(const PRow& f) const;
  bool member(const PRow& f) const;
  bool is_zero_module() const { return basis_.empty(); }
  bool is_full() const;

  int cmp_terms(const ModTerm& a, const ModTerm& b) const;
  std::optional<ModTerm> leading_term(const PRow& f) const;

 private:
  struct Lead {
    ModTerm term;
    Rat coeff;
  };

  Lead lead_of(const PRow& f) const;
  PRow reduce_indexed(const PRow& f, const std::vector<PRow>& rows,
                      const std::vector<Lead>& leads,
                      const std::vector<std::vector<std::size_t>>& by_pos) const;

  int nvars_;
  int rank_;
  ModuleOrder order_;
  std::vector<PRow> gens_;
  std::vector<PRow> basis_;
  std::vector<Lead> basis_leads_;
  std::vector<std::vector<std::size_t>> basis_by_pos_;
};

/// Module intersection via a tagged-sum elimination.
PModule intersect(const PModule& a, const PModule& b);

/// The ideal (N : M) = {a : a e_t in N for all t}, as a rank-1 module.
PModule colon_module_ideal(const PModule& n);

// Row utilities shared by the matrix ring and the harness.
PRow prow_zero(int nvars, int rank);
QRow qrow_zero(int nvars, int rank);
bool qrow_is_zero(const QRow& f);
QRow qrow_add(QRow a, const QRow& b);
QRow qrow_sub(QRow a, const QRow& b);
QRow qrow_left_mul(const QPoly& c, const QRow& f);
QuatVec qrow_evaluate(const QRow& f, std::span<const Rat> point);
QRow qrow_from_prow(const PRow& f);
/// <f(a), v> = sum_t f_t(a) v_t.
Quaternion pairing_at(const QRow& f, std::span<const Rat> point, const QuatVec& v);

/// Scalar restriction of one H_c row: rank n quaternionic -> rank 4n
/// rational, coordinate t component s landing at position 4t + s - 1.
PRow unfold_qrow(const QRow& f);
QRow fold_prow(const PRow& f);

/// The n hermitian combinations sum_i f_i[j]* f_i, j = 1..n, of a tuple
/// of rows.
std::vector<QRow> hermitian_row_combinations(const std::vector<QRow>& tuple);

enum class RingTag { Rational, QuaternionCentral };

/// Submodule of A^n for A in {Q[x], H_c[x]}. Quaternionic modules are
/// always computed through scalar restriction: generators are closed
/// under left multiplication by i, j, k at construction and unfolded
/// into a rational module of rank 4n.
class Submodule {
 public:
  Submodule(RingTag ring, int nvars, int rank, std::vector<QRow> generators,
            MonoOrderKind term_order = MonoOrderKind::DegRevLex);

  static Submodule full(RingTag ring, int nvars, int rank,
                        MonoOrderKind term_order = MonoOrderKind::DegRevLex);

  RingTag ring() const { return ring_; }
  int nvars() const { return nvars_; }
  int rank() const { return rank_; }
  const std::vector<QRow>& generators() const { return gens_; }
  /// The underlying rational module: rank n for Q[x], rank 4n for H_c.
  const PModule& restricted() const { return restricted_; }
  MonoOrderKind term_order() const { return term_order_; }

  bool member(const QRow& f) const;
  bool is_zero_module() const { return restricted_.is_zero_module(); }
  bool is_full() const { return restricted_.is_full(); }
  /// Canonical basis folded back into rows over the declared ring.
  std::vector<QRow> canonical_basis() const;

  /// Same module with extra generators adjoined.
  Submodule extended(const std::vector<QRow>& extra) const;

  /// Mutual inclusion of canonical bases.
  bool same_module(const Submodule& other) const;
  bool contains(const Submodule& other) const;

 private:
  static const std::vector<QRow>& validate(const std::vector<QRow>& gens, RingTag ring,
                                           int nvars, int rank);

  RingTag ring_;
  int nvars_;
  int rank_;
  MonoOrderKind term_order_;
  std::vector<QRow> gens_;
  PModule restricted_;
};

Submodule intersect(const Submodule& a, const Submodule& b);

/// (N : M) as a rank-1 module over the same ring. For H_c the result is
/// the two-sided ideal generated by the rational colon ideal of the
/// scalar restriction.
Submodule colon_module(const Submodule& n);

/// A rational point together with a pairing vector, the data of the
/// evaluation submodule C_{m_a, v}.
struct PointedFiber {
  std::vector<Rat> point;
  QuatVec vec;  // column; must be nonzero, rational when the ring is Q[x]
};

/// C_{m_a, v} = {f : <f(a), v> = 0}: generated by the shifted basis rows
/// (x_i - a_i) e_j together with the constant rows annihilating v.
Submodule c_module(RingTag ring, int nvars, int rank, const PointedFiber& fiber,
                   MonoOrderKind term_order = MonoOrderKind::DegRevLex);

/// K(N, m_a): the smallest m_a-prime submodule containing N, i.e.
/// {m : m(a) lies in the span of the generator evaluations}. The span is
/// rational for Q[x] and a left H-subspace for H_c.
Submodule k_module(const Submodule& n, std::span<const Rat> point);

/// The scalar-restricted module (identity for Q[x] modules).
const PModule& restrict_scalars(const Submodule& n);

enum class WitnessVerdict { Consistent, RealViolated, Inapplicable };

struct WitnessReport {
  WitnessVerdict verdict = WitnessVerdict::Inapplicable;
  std::vector<bool> hermitian_in_module;  // one per position j
  std::vector<bool> tuple_in_module;      // one per tuple element
};

/// Checks the realness axiom instance: if every hermitian combination of
/// the tuple lies in N but some tuple element does not, the tuple
/// witnesses that N is not real.
WitnessReport realness_witness_check(const std::vector<QRow>& tuple, const Submodule& n);

}  // namespace qnss
