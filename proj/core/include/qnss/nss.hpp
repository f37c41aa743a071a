#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qnss/matring.hpp"
#include "qnss/submodule.hpp"

namespace qnss {

enum class ZeroProvenance { Fixture, GridSearch, Solver };

/// One common zero (a, v): F(a)v = 0 for the instance generators. Points
/// are quaternionic in general; rings with real points carry real
/// quaternions.
struct ZeroPair {
  std::vector<Quaternion> point;
  QuatVec vec;
  ZeroProvenance provenance = ZeroProvenance::Fixture;
};

struct ZeroSet {
  std::vector<ZeroPair> pairs;
};

/// Checks that every pair annihilates every generator row: <g(a), v> = 0.
/// Returns an explanation for the first failure, or nullopt when valid.
std::optional<std::string> validate_zero_set(const ZeroSet& s, const std::vector<QRow>& gens);

/// Exhaustive search over the rational box: all points whose coordinates
/// are reduced fractions p/q with q <= max_den and |p/q| <= box. For each
/// point the full annihilator of the generator evaluations is added, one
/// pair per basis vector.
ZeroSet grid_search_zeros(const std::vector<QRow>& gens, RingTag ring, int nvars, int rank,
                          int box, int max_den);

/// Rational roots of a nonzero univariate polynomial (rational root
/// theorem on the cleared-denominator form, candidates verified by
/// evaluation), in increasing order.
std::vector<Rat> univariate_rational_roots(const Poly& p);

/// Exact zero set of a rank-1 univariate system: the common rational
/// roots of all generator components, paired with v = 1.
ZeroSet univariate_solver_zeros(const std::vector<QRow>& gens);

struct VanishingResult {
  Submodule module;
  bool vacuous = false;  // empty zero set: the full module, flagged
};

/// J(S) as the finite intersection of the evaluation submodules
/// C_{m_a, v} over the pairs of S. Points must be real for these rings.
VanishingResult vanishing_module(const ZeroSet& s, RingTag ring, int nvars, int rank,
                                 MonoOrderKind term_order = MonoOrderKind::DegRevLex);

/// One real-closure inference: a tuple of rows whose hermitian
/// combinations all lie in the module generated so far, licensing the
/// admission of every tuple element. `uses` records which prior pool
/// elements (generators first, then admitted rows in order) the step
/// consumed; it is informational but index-checked.
struct CertStep {
  std::vector<QRow> tuple;
  std::vector<std::size_t> uses;
};

struct Certificate {
  std::vector<CertStep> steps;
  std::optional<QRow> target;
};

struct CertVerdict {
  bool accepted = false;
  int failed_step = -1;  // -1: none
  std::string message;
  std::optional<Submodule> closure;  // module after the last admitted step
};

/// Replays a certificate over the module generated by `generators`,
/// admitting each step only if all hermitian combinations are members.
CertVerdict verify_certificate(const Certificate& cert, const std::vector<QRow>& generators,
                               RingTag ring, int nvars, int rank,
                               MonoOrderKind term_order = MonoOrderKind::DegRevLex);

/// Monomial multiples (degree at most `bound`) of the generators and of
/// the vanishing-module basis, deduplicated and sorted by (degree,
/// structural order) for reproducible scans.
std::vector<QRow> default_candidate_pool(const std::vector<QRow>& generators,
                                         const Submodule* vanishing, int nvars, int rank,
                                         int bound);

struct ClosureResult {
  Submodule module;
  Certificate certificate;
  std::vector<QRow> admitted;
};

/// Sound bounded under-approximation of the real radical: fixpoint scan
/// over tuples (size at most max_tuple) from the candidate pool,
/// admitting a tuple whenever its hermitian combinations lie in the
/// current module. Terminates because the pool is finite and every
/// admission strictly grows the module. No completeness is claimed at
/// any bound.
ClosureResult real_closure_bounded(const std::vector<QRow>& generators, RingTag ring,
                                   int nvars, int rank, const std::vector<QRow>& pool,
                                   int max_tuple,
                                   MonoOrderKind term_order = MonoOrderKind::DegRevLex);

enum class InstanceRing { Rational, QuaternionCentral, QuaternionFree };

/// A Nullstellensatz check instance. Vector instances list generator
/// rows; matrix instances list generator matrices, which the checker
/// lowers to their rows. For the free ring the data is transported
/// through phi / phi_n / rho before checking.
struct Instance {
  std::string name;
  InstanceRing ring = InstanceRing::Rational;
  int nvars = 0;
  int rank = 1;

  std::vector<QRow> gen_rows;        // Rational / QuaternionCentral
  std::vector<QRow> query_rows;
  std::vector<QMat> gen_mats;
  std::vector<QMat> query_mats;

  std::vector<std::vector<NCPoly>> nc_gen_rows;  // QuaternionFree
  std::vector<std::vector<NCPoly>> nc_query_rows;
  std::vector<NCMat> nc_gen_mats;
  std::vector<NCMat> nc_query_mats;

  ZeroSet zeros;
  std::optional<Certificate> certificate;
  int bound = 2;
  int max_tuple = 2;
  bool assert_radical_equals_vanishing = false;
  std::optional<bool> expect_geometric;
  std::optional<bool> expect_algebraic;

  // Optional zero-set acquisition beyond the fixture pairs.
  std::optional<std::pair<int, int>> grid_search;  // (box, max_den)
  bool solve_univariate = false;
};

/// Instance data lowered to the ring the engine computes in: free-ring
/// instances arrive as their phi-images over 4d variables with rho-mapped
/// points, matrix generators as their rows.
struct LoweredInstance {
  RingTag ring = RingTag::Rational;
  int nvars = 0;
  int rank = 1;
  std::vector<QRow> gens;
  std::vector<QRow> queries;
  ZeroSet zeros;
  std::optional<Certificate> certificate;
};

LoweredInstance lower_instance(const Instance& inst);

struct InstanceReport {
  std::string name;
  bool loaded = true;

  bool zero_set_valid = false;
  std::string zero_set_error;
  bool vacuous_zero_set = false;

  bool geometric = false;

  bool has_certificate = false;
  bool certificate_accepted = false;
  std::string certificate_error;

  int closure_admitted = 0;
  bool closure_member = false;

  bool algebraic = false;

  bool soundness_ok = false;
  std::string soundness_error;

  bool equality_checked = false;
  bool equality_ok = false;

  bool expectations_ok = true;
  std::string expectation_error;

  bool consistent() const {
    return loaded && zero_set_valid && soundness_ok && expectations_ok &&
           (!equality_checked || equality_ok);
  }
};

/// Runs both sides of the Nullstellensatz on one instance: the geometric
/// verdict (query in J(S)), the algebraic verdict (certificate replay
/// and/or bounded closure membership), the soundness cross-check, and
/// the optional radical-equality check.
InstanceReport check_nullstellensatz_instance(const Instance& inst);

struct StronglyRealVerdict {
  bool decomposition_ok = false;  // sum F_i* F_i == G + H*
  bool g_in_ideal = false;
  bool h_in_ideal = false;
  std::vector<bool> tuple_in_ideal;
  bool pointwise_forced_ok = true;  // vanishing of the square sum forces each F_i(a)v = 0
  bool accepted = false;
  std::string message;
};

/// Verifies a strongly-real witness: sum F_i* F_i = G + H* with
/// G, H in I, then reports membership of each F_i and replays the
/// pointwise argument on the zero set when one is supplied.
StronglyRealVerdict strongly_real_witness_check(const std::vector<QMat>& tuple,
                                                const LeftIdeal& ideal, const QMat& g,
                                                const QMat& h, const ZeroSet* zeros);

struct RealityTransferVerdict {
  bool hypothesis_ok = false;       // sum w_s* w_s in J . H_c
  bool scalar_identity_ok = false;  // scalar part equals the component square sum
  bool scalar_in_ideal = false;
  std::vector<std::array<bool, 4>> component_membership;
  bool all_components_in = false;
  std::string message;
};

/// The reality-transfer check between a rational ideal J and J . H_c:
/// hypothesis sum w_s* w_s in J . H_c, the scalar identity
/// sum (alpha^2 + beta^2 + gamma^2 + delta^2), and componentwise
/// membership of each witness in J.
RealityTransferVerdict reality_transfer_check(const Submodule& j_rational,
                                          const std::vector<QPoly>& witnesses);

}  // namespace qnss
