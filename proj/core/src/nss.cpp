#include "qnss/nss.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qnss {

namespace {

std::optional<std::vector<Rat>> real_point(const std::vector<Quaternion>& point) {
  std::vector<Rat> out;
  out.reserve(point.size());
  for (const Quaternion& q : point) {
    if (!q.is_real()) return std::nullopt;
    out.push_back(q.a());
  }
  return out;
}

int qrow_degree(const QRow& f) {
  int deg = -1;
  for (const QPoly& p : f) deg = std::max(deg, p.degree());
  return deg;
}

int poly_struct_cmp(const Poly& x, const Poly& y) {
  auto it = x.terms().begin();
  auto jt = y.terms().begin();
  while (it != x.terms().end() && jt != y.terms().end()) {
    if (it->first != jt->first) return it->first < jt->first ? -1 : 1;
    int c = cmp(it->second, jt->second);
    if (c != 0) return c;
    ++it;
    ++jt;
  }
  if (it != x.terms().end()) return 1;
  if (jt != y.terms().end()) return -1;
  return 0;
}

int qrow_struct_cmp(const QRow& x, const QRow& y) {
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  for (std::size_t t = 0; t < x.size(); ++t) {
    for (int s = 1; s <= 4; ++s) {
      int c = poly_struct_cmp(x[t].comp(s), y[t].comp(s));
      if (c != 0) return c;
    }
  }
  return 0;
}

void enumerate_monomials(int nvars, int bound, int var, Monomial current,
                         std::vector<Monomial>& out) {
  if (var == nvars) {
    out.push_back(current);
    return;
  }
  for (int e = 0; bound - e >= 0; ++e) {
    Monomial next = e == 0 ? current : current * Monomial::variable(var, e);
    enumerate_monomials(nvars, bound - e, var + 1, next, out);
  }
}

}  // namespace

std::optional<std::string> validate_zero_set(const ZeroSet& s, const std::vector<QRow>& gens) {
  for (std::size_t t = 0; t < s.pairs.size(); ++t) {
    const ZeroPair& pair = s.pairs[t];
    auto pt = real_point(pair.point);
    if (!pt) return "pair " + std::to_string(t) + ": point is not real";
    bool vzero = true;
    for (const Quaternion& q : pair.vec)
      if (!q.is_zero()) vzero = false;
    if (vzero) return "pair " + std::to_string(t) + ": vector is zero";
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (!pairing_at(gens[g], *pt, pair.vec).is_zero()) {
        return "pair " + std::to_string(t) + " does not annihilate generator " +
               std::to_string(g);
      }
    }
  }
  return std::nullopt;
}

namespace {

std::vector<Rat> rational_ladder(int box, int max_den) {
  std::vector<Rat> out;
  for (int q = 1; q <= max_den; ++q) {
    for (int p = -box * q; p <= box * q; ++p) {
      Rat r(p, q);
      r.canonicalize();
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void append_annihilator_pairs(const std::vector<QRow>& gens, RingTag ring, int rank,
                              const std::vector<Rat>& point, ZeroProvenance prov,
                              ZeroSet& out) {
  QuatMatrix m(gens.size(), rank);
  for (std::size_t r = 0; r < gens.size(); ++r) {
    QuatVec row = qrow_evaluate(gens[r], point);
    for (int c = 0; c < rank; ++c) m.at(r, c) = row[c];
  }
  QuatSubspace null_space = null_space_right(m);
  for (const QuatVec& v : null_space.basis()) {
    if (ring == RingTag::Rational) {
      bool real = true;
      for (const Quaternion& q : v)
        if (!q.is_real()) real = false;
      if (!real) continue;  // canonical basis of a rational system is rational
    }
    ZeroPair pair;
    for (const Rat& c : point) pair.point.emplace_back(c);
    pair.vec = v;
    pair.provenance = prov;
    out.pairs.push_back(std::move(pair));
  }
}

}  // namespace

ZeroSet grid_search_zeros(const std::vector<QRow>& gens, RingTag ring, int nvars, int rank,
                          int box, int max_den) {
  if (box < 0 || max_den < 1) throw std::invalid_argument("bad grid bounds");
  std::vector<Rat> ladder = rational_ladder(box, max_den);
  ZeroSet out;
  std::vector<Rat> point(nvars, Rat(0));
  std::function<void(int)> walk = [&](int coord) {
    if (coord == nvars) {
      append_annihilator_pairs(gens, ring, rank, point, ZeroProvenance::GridSearch, out);
      return;
    }
    for (const Rat& r : ladder) {
      point[coord] = r;
      walk(coord + 1);
    }
  };
  walk(0);
  return out;
}

std::vector<Rat> univariate_rational_roots(const Poly& p) {
  if (p.nvars() != 1) throw std::invalid_argument("polynomial is not univariate");
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has every root");
  // Clear denominators and strip powers of x.
  mpz_class den_lcm(1);
  for (const auto& [m, c] : p.terms()) den_lcm = lcm(den_lcm, c.get_den());
  std::map<int, mpz_class> coeffs;
  int lowest = -1, highest = 0;
  for (const auto& [m, c] : p.terms()) {
    int e = m.exponent(0);
    Rat scaled = c * Rat(den_lcm);
    coeffs[e] = scaled.get_num();
    if (lowest < 0 || e < lowest) lowest = e;
    highest = std::max(highest, e);
  }
  std::vector<Rat> roots;
  if (lowest > 0) roots.emplace_back(0);
  if (highest == lowest) {
    return roots;  // a monomial: only the origin
  }
  auto divisors = [](mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> out;
    for (mpz_class d(1); d * d <= n; ++d) {
      if (n % d == 0) {
        out.push_back(d);
        out.push_back(n / d);
      }
    }
    return out;
  };
  const mpz_class a0 = coeffs.at(lowest);
  const mpz_class an = coeffs.at(highest);
  for (const mpz_class& num : divisors(a0)) {
    for (const mpz_class& den : divisors(an)) {
      for (int sign = -1; sign <= 1; sign += 2) {
        Rat candidate(sign * num, den);
        candidate.canonicalize();
        std::vector<Rat> at = {candidate};
        if (rat_is_zero(p.evaluate(at)) &&
            std::find(roots.begin(), roots.end(), candidate) == roots.end()) {
          roots.push_back(candidate);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

ZeroSet univariate_solver_zeros(const std::vector<QRow>& gens) {
  ZeroSet out;
  if (gens.empty()) return out;
  if (gens.front().size() != 1 || gens.front().front().nvars() != 1)
    throw std::invalid_argument("solver supports univariate rank-1 systems");
  // Candidates come from the first nonzero component; a common zero of
  // the system must annihilate every component of every generator.
  const Poly* seed = nullptr;
  for (const QRow& g : gens)
    for (int s = 1; s <= 4 && !seed; ++s)
      if (!g.front().comp(s).is_zero()) seed = &g.front().comp(s);
  if (!seed) return out;
  for (const Rat& root : univariate_rational_roots(*seed)) {
    std::vector<Rat> at = {root};
    bool common = true;
    for (const QRow& g : gens)
      if (!g.front().evaluate(at).is_zero()) common = false;
    if (!common) continue;
    ZeroPair pair;
    pair.point = {Quaternion(root)};
    pair.vec = {Quaternion::one()};
    pair.provenance = ZeroProvenance::Solver;
    out.pairs.push_back(std::move(pair));
  }
  return out;
}

VanishingResult vanishing_module(const ZeroSet& s, RingTag ring, int nvars, int rank,
                                 MonoOrderKind term_order) {
  if (s.pairs.empty()) {
    return {Submodule::full(ring, nvars, rank, term_order), true};
  }
  std::optional<Submodule> acc;
  for (const ZeroPair& pair : s.pairs) {
    auto pt = real_point(pair.point);
    if (!pt) throw std::invalid_argument("zero-set point is not real");
    Submodule c = c_module(ring, nvars, rank, PointedFiber{*pt, pair.vec}, term_order);
    acc = acc ? intersect(*acc, c) : c;
  }
  return {*acc, false};
}

CertVerdict verify_certificate(const Certificate& cert, const std::vector<QRow>& generators,
                               RingTag ring, int nvars, int rank, MonoOrderKind term_order) {
  CertVerdict verdict;
  Submodule cur(ring, nvars, rank, generators, term_order);
  std::size_t pool_size = generators.size();
  for (std::size_t t = 0; t < cert.steps.size(); ++t) {
    const CertStep& step = cert.steps[t];
    if (step.tuple.empty()) {
      verdict.failed_step = static_cast<int>(t);
      verdict.message = "step has an empty tuple";
      return verdict;
    }
    for (std::size_t u : step.uses) {
      if (u >= pool_size) {
        verdict.failed_step = static_cast<int>(t);
        verdict.message = "step references element " + std::to_string(u) +
                          " but only " + std::to_string(pool_size) + " exist";
        return verdict;
      }
    }
    std::vector<QRow> herms = hermitian_row_combinations(step.tuple);
    for (std::size_t j = 0; j < herms.size(); ++j) {
      if (!cur.member(herms[j])) {
        verdict.failed_step = static_cast<int>(t);
        verdict.message = "hermitian combination " + std::to_string(j + 1) +
                          " is not a member of the accumulated module";
        return verdict;
      }
    }
    cur = cur.extended(step.tuple);
    pool_size += step.tuple.size();
  }
  if (cert.target && !cur.member(*cert.target)) {
    verdict.message = "target is not a member after the final step";
    verdict.closure = cur;
    return verdict;
  }
  verdict.accepted = true;
  verdict.closure = cur;
  return verdict;
}

std::vector<QRow> default_candidate_pool(const std::vector<QRow>& generators,
                                         const Submodule* vanishing, int nvars, int rank,
                                         int bound) {
  std::vector<Monomial> monomials;
  enumerate_monomials(nvars, bound, 0, Monomial(), monomials);

  std::vector<QRow> bases = generators;
  if (vanishing) {
    for (const QRow& b : vanishing->canonical_basis()) bases.push_back(b);
  }

  std::vector<QRow> pool;
  for (const QRow& base : bases) {
    for (const Monomial& m : monomials) {
      QPoly factor = QPoly::from_poly(Poly::term(nvars, m, Rat(1)));
      QRow row = qrow_left_mul(factor, base);
      if (qrow_is_zero(row) || qrow_degree(row) > bound) continue;
      pool.push_back(std::move(row));
    }
  }
  std::sort(pool.begin(), pool.end(), [](const QRow& x, const QRow& y) {
    int dx = qrow_degree(x);
    int dy = qrow_degree(y);
    if (dx != dy) return dx < dy;
    return qrow_struct_cmp(x, y) < 0;
  });
  pool.erase(std::unique(pool.begin(), pool.end(),
                         [](const QRow& x, const QRow& y) { return qrow_struct_cmp(x, y) == 0; }),
             pool.end());
  return pool;
}

ClosureResult real_closure_bounded(const std::vector<QRow>& generators, RingTag ring,
                                   int nvars, int rank, const std::vector<QRow>& pool,
                                   int max_tuple, MonoOrderKind term_order) {
  if (max_tuple < 1) throw std::invalid_argument("max_tuple must be at least 1");
  Submodule cur(ring, nvars, rank, generators, term_order);
  Certificate cert;
  std::vector<QRow> admitted;

  auto nonmembers = [&]() {
    std::vector<QRow> out;
    for (const QRow& f : pool)
      if (!cur.member(f)) out.push_back(f);
    return out;
  };

  std::vector<QRow> cand = nonmembers();
  bool progress = true;
  while (progress) {
    progress = false;
    // Tuples scanned by size, candidates already in (degree, structural)
    // order, so certificates are reproducible.
    std::vector<std::size_t> idx;
    std::function<bool(std::size_t, int)> scan = [&](std::size_t from, int remaining) {
      if (remaining == 0) {
        std::vector<QRow> tuple;
        for (std::size_t t : idx) tuple.push_back(cand[t]);
        std::vector<QRow> herms = hermitian_row_combinations(tuple);
        for (const QRow& h : herms)
          if (!cur.member(h)) return false;
        cert.steps.push_back({tuple, {}});
        for (const QRow& f : tuple) admitted.push_back(f);
        cur = cur.extended(tuple);
        return true;
      }
      for (std::size_t t = from; t < cand.size(); ++t) {
        idx.push_back(t);
        if (scan(t + 1, remaining - 1)) return true;
        idx.pop_back();
      }
      return false;
    };
    for (int k = 1; k <= max_tuple && !progress; ++k) {
      idx.clear();
      if (scan(0, k)) {
        progress = true;
        cand = nonmembers();
      }
    }
  }
  return {cur, std::move(cert), std::move(admitted)};
}

namespace {

QRow transport_nc_row(const std::vector<NCPoly>& row) {
  QRow out;
  out.reserve(row.size());
  for (const NCPoly& f : row) out.push_back(phi(f));
  return out;
}

}  // namespace

LoweredInstance lower_instance(const Instance& inst) {
  LoweredInstance w;
  w.rank = inst.rank;
  if (inst.ring == InstanceRing::QuaternionFree) {
    w.ring = RingTag::QuaternionCentral;
    w.nvars = 4 * inst.nvars;
    for (const auto& row : inst.nc_gen_rows) w.gens.push_back(transport_nc_row(row));
    for (const auto& row : inst.nc_query_rows) w.queries.push_back(transport_nc_row(row));
    for (const NCMat& m : inst.nc_gen_mats) {
      QMat img = phi_n(m);
      for (int r = 0; r < img.n(); ++r) w.gens.push_back(img.row(r));
    }
    for (const NCMat& m : inst.nc_query_mats) {
      QMat img = phi_n(m);
      for (int r = 0; r < img.n(); ++r) w.queries.push_back(img.row(r));
    }
    for (const ZeroPair& pair : inst.zeros.pairs) {
      ZeroPair lowered;
      for (const Rat& c : rho(pair.point)) lowered.point.emplace_back(c);
      lowered.vec = pair.vec;
      lowered.provenance = pair.provenance;
      w.zeros.pairs.push_back(std::move(lowered));
    }
    w.certificate = inst.certificate;  // tuples already over H_c via the loader
  } else {
    w.ring = inst.ring == InstanceRing::Rational ? RingTag::Rational
                                                 : RingTag::QuaternionCentral;
    w.nvars = inst.nvars;
    w.gens = inst.gen_rows;
    w.queries = inst.query_rows;
    for (const QMat& m : inst.gen_mats)
      for (int r = 0; r < m.n(); ++r) w.gens.push_back(m.row(r));
    for (const QMat& m : inst.query_mats)
      for (int r = 0; r < m.n(); ++r) w.queries.push_back(m.row(r));
    w.zeros = inst.zeros;
    w.certificate = inst.certificate;
  }
  return w;
}

InstanceReport check_nullstellensatz_instance(const Instance& inst) {
  InstanceReport report;
  report.name = inst.name;

  LoweredInstance w = lower_instance(inst);
  if (w.gens.empty()) {
    report.loaded = false;
    report.zero_set_error = "instance has no generators";
    return report;
  }

  if (auto err = validate_zero_set(w.zeros, w.gens)) {
    report.zero_set_valid = false;
    report.zero_set_error = *err;
    return report;
  }
  report.zero_set_valid = true;

  VanishingResult vanishing =
      vanishing_module(w.zeros, w.ring, w.nvars, w.rank);
  report.vacuous_zero_set = vanishing.vacuous;

  report.geometric = true;
  for (const QRow& q : w.queries)
    if (!vanishing.module.member(q)) report.geometric = false;

  // Algebraic side 1: certificate replay.
  std::vector<QRow> cert_admitted;
  bool cert_queries_member = false;
  if (w.certificate) {
    report.has_certificate = true;
    CertVerdict verdict =
        verify_certificate(*w.certificate, w.gens, w.ring, w.nvars, w.rank);
    report.certificate_accepted = verdict.accepted;
    report.certificate_error = verdict.message;
    if (verdict.accepted) {
      cert_queries_member = true;
      for (const QRow& q : w.queries)
        if (!verdict.closure->member(q)) cert_queries_member = false;
      for (const CertStep& step : w.certificate->steps)
        for (const QRow& f : step.tuple) cert_admitted.push_back(f);
    }
  }

  // Algebraic side 2: bounded closure from the default pool.
  std::vector<QRow> pool =
      default_candidate_pool(w.gens, &vanishing.module, w.nvars, w.rank, inst.bound);
  ClosureResult closure =
      real_closure_bounded(w.gens, w.ring, w.nvars, w.rank, pool, inst.max_tuple);
  report.closure_admitted = static_cast<int>(closure.admitted.size());
  report.closure_member = true;
  for (const QRow& q : w.queries)
    if (!closure.module.member(q)) report.closure_member = false;

  report.algebraic = cert_queries_member || report.closure_member;

  // Soundness: everything admitted on the algebraic side must vanish on
  // every zero pair, and an algebraic member that fails geometrically is
  // a hard error.
  report.soundness_ok = true;
  auto check_vanishes = [&](const QRow& f, const char* what) {
    for (const ZeroPair& pair : w.zeros.pairs) {
      auto pt = real_point(pair.point);
      if (!pairing_at(f, *pt, pair.vec).is_zero()) {
        report.soundness_ok = false;
        report.soundness_error = std::string(what) + " element does not vanish on the zero set";
      }
    }
  };
  for (const QRow& f : closure.admitted) check_vanishes(f, "closure-admitted");
  for (const QRow& f : cert_admitted) check_vanishes(f, "certificate-admitted");
  if (report.algebraic && !report.geometric) {
    report.soundness_ok = false;
    report.soundness_error = "algebraic member fails the geometric test";
  }

  if (inst.assert_radical_equals_vanishing) {
    report.equality_checked = true;
    report.equality_ok = closure.module.same_module(vanishing.module);
  }

  if (inst.expect_geometric && *inst.expect_geometric != report.geometric) {
    report.expectations_ok = false;
    report.expectation_error = "geometric verdict differs from the expected value";
  }
  if (inst.expect_algebraic && *inst.expect_algebraic != report.algebraic) {
    report.expectations_ok = false;
    report.expectation_error = "algebraic verdict differs from the expected value";
  }
  return report;
}

StronglyRealVerdict strongly_real_witness_check(const std::vector<QMat>& tuple,
                                                const LeftIdeal& ideal, const QMat& g,
                                                const QMat& h, const ZeroSet* zeros) {
  StronglyRealVerdict verdict;
  if (tuple.empty()) {
    verdict.message = "empty tuple";
    return verdict;
  }
  const int n = tuple.front().n();
  const int nvars = tuple.front().nvars();
  QMat sum(nvars, n);
  for (const QMat& f : tuple) sum = sum + f.involute() * f;
  verdict.decomposition_ok = sum == g + h.involute();
  if (!verdict.decomposition_ok) {
    verdict.message = "sum F_i* F_i differs from G + H*";
    return verdict;
  }
  verdict.g_in_ideal = ideal.contains(g);
  verdict.h_in_ideal = ideal.contains(h);
  bool all_in = true;
  for (const QMat& f : tuple) {
    bool in = ideal.contains(f);
    verdict.tuple_in_ideal.push_back(in);
    all_in = all_in && in;
  }
  if (zeros) {
    for (const ZeroPair& pair : zeros->pairs) {
      auto pt = real_point(pair.point);
      if (!pt) continue;
      Quaternion square_sum;
      std::vector<QuatVec> images;
      for (const QMat& f : tuple) {
        QuatVec fv = mat_evaluate(f, *pt, pair.vec);
        for (const Quaternion& q : fv) square_sum += q.conjugate() * q;
        images.push_back(std::move(fv));
      }
      if (square_sum.is_zero()) {
        for (const QuatVec& fv : images)
          for (const Quaternion& q : fv)
            if (!q.is_zero()) verdict.pointwise_forced_ok = false;
      }
    }
  }
  verdict.accepted = verdict.decomposition_ok && verdict.g_in_ideal && verdict.h_in_ideal &&
                     all_in && verdict.pointwise_forced_ok;
  return verdict;
}

RealityTransferVerdict reality_transfer_check(const Submodule& j_rational,
                                          const std::vector<QPoly>& witnesses) {
  if (j_rational.ring() != RingTag::Rational || j_rational.rank() != 1)
    throw std::invalid_argument("J must be a rank-1 rational module");
  RealityTransferVerdict verdict;
  const int nvars = j_rational.nvars();

  Submodule j_hc(RingTag::QuaternionCentral, nvars, 1, j_rational.generators(),
                 j_rational.term_order());

  QPoly herm_sum(nvars);
  Poly square_sum(nvars);
  for (const QPoly& w : witnesses) {
    herm_sum += w.involute() * w;
    for (int s = 1; s <= 4; ++s) square_sum += w.comp(s) * w.comp(s);
  }

  verdict.hypothesis_ok = j_hc.member({herm_sum});
  if (!verdict.hypothesis_ok) {
    verdict.message = "sum w* w is not a member of J . H_c";
    return verdict;
  }
  verdict.scalar_identity_ok = herm_sum.comp(1) == square_sum && herm_sum.comp(2).is_zero() &&
                               herm_sum.comp(3).is_zero() && herm_sum.comp(4).is_zero();
  verdict.scalar_in_ideal = j_rational.member({QPoly::from_poly(square_sum)});

  verdict.all_components_in = true;
  for (const QPoly& w : witnesses) {
    std::array<bool, 4> in{};
    for (int s = 1; s <= 4; ++s) {
      in[s - 1] = j_rational.member({QPoly::from_poly(w.comp(s))});
      verdict.all_components_in = verdict.all_components_in && in[s - 1];
    }
    verdict.component_membership.push_back(in);
  }
  return verdict;
}

}  // namespace qnss
