#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qnss/instance.hpp"
#include "qnss/nss.hpp"
#include "qnss/parse.hpp"
#include "testutil.hpp"

using namespace qnss;
using testutil::Rng;

namespace {

QPoly qp(const std::string& text, int nvars) { return parse_qpoly(text, nvars); }

ZeroPair pair_at(std::vector<Quaternion> point, QuatVec vec) {
  return ZeroPair{std::move(point), std::move(vec), ZeroProvenance::Fixture};
}

}  // namespace

TEST_CASE("vanishing modules") {
  // S = {(0, 1)}, d = n = 1: the ideal (x)
  ZeroSet s1{{pair_at({Quaternion()}, {Quaternion::one()})}};
  VanishingResult v1 = vanishing_module(s1, RingTag::Rational, 1, 1);
  CHECK_FALSE(v1.vacuous);
  CHECK(v1.module.member({qp("x1", 1)}));
  CHECK_FALSE(v1.module.member({qp("1", 1)}));

  // S = {((0,0), e1), ((0,0), e2)} over rank 2: m_0^2
  ZeroSet s2{{pair_at({Quaternion(), Quaternion()}, {Quaternion::one(), Quaternion()}),
              pair_at({Quaternion(), Quaternion()}, {Quaternion(), Quaternion::one()})}};
  VanishingResult v2 = vanishing_module(s2, RingTag::Rational, 2, 2);
  CHECK(v2.module.member({qp("x1", 2), qp("0", 2)}));
  CHECK(v2.module.member({qp("0", 2), qp("x2", 2)}));
  CHECK_FALSE(v2.module.member({qp("1", 2), qp("0", 2)}));

  // H_c with v = i: still the full maximal ideal
  ZeroSet s3{{pair_at({Quaternion()}, {Quaternion::i()})}};
  VanishingResult v3 = vanishing_module(s3, RingTag::QuaternionCentral, 1, 1);
  CHECK(v3.module.member({qp("x1", 1)}));
  CHECK(v3.module.member({qp("j*x1", 1)}));
  CHECK_FALSE(v3.module.member({qp("i", 1)}));

  // empty set: vacuous full module
  VanishingResult v4 = vanishing_module(ZeroSet{}, RingTag::Rational, 1, 1);
  CHECK(v4.vacuous);
  CHECK(v4.module.is_full());
}

TEST_CASE("zero set validation") {
  std::vector<QRow> gens = {{qp("x1^2", 1)}};
  ZeroSet good{{pair_at({Quaternion()}, {Quaternion::one()})}};
  CHECK_FALSE(validate_zero_set(good, gens).has_value());
  ZeroSet bad{{pair_at({Quaternion(Rat(1))}, {Quaternion::one()})}};
  CHECK(validate_zero_set(bad, gens).has_value());
  ZeroSet nonreal{{pair_at({Quaternion::i()}, {Quaternion::one()})}};
  CHECK(validate_zero_set(nonreal, gens).has_value());
}

TEST_CASE("certificate replay") {
  // generators {(x^2+y^2) e1}: the pair (x, y) is admissible, then x e1
  std::vector<QRow> gens = {{qp("x1^2 + x2^2", 2)}};
  Certificate cert;
  cert.steps.push_back({{{qp("x1", 2)}, {qp("x2", 2)}}, {0}});
  cert.target = QRow{qp("x1", 2)};
  CertVerdict verdict = verify_certificate(cert, gens, RingTag::Rational, 2, 1);
  CHECK(verdict.accepted);

  // a second trivial step: y^2 e1 is already a module multiple
  Certificate cert2 = cert;
  cert2.steps.push_back({{{qp("x2", 2)}}, {0, 1}});
  cert2.target = QRow{qp("x2^2", 2)};
  CHECK(verify_certificate(cert2, gens, RingTag::Rational, 2, 1).accepted);

  // bogus: hermitian sum of (1) is 1, not a member
  Certificate bogus;
  bogus.steps.push_back({{{qp("1", 2)}}, {}});
  CertVerdict rejected = verify_certificate(bogus, gens, RingTag::Rational, 2, 1);
  CHECK_FALSE(rejected.accepted);
  CHECK(rejected.failed_step == 0);

  // malformed index
  Certificate malformed;
  malformed.steps.push_back({{{qp("x1", 2)}, {qp("x2", 2)}}, {5}});
  CertVerdict bad_index = verify_certificate(malformed, gens, RingTag::Rational, 2, 1);
  CHECK_FALSE(bad_index.accepted);
  CHECK(bad_index.failed_step == 0);
}

TEST_CASE("bounded closure on the worked ideals") {
  // <x^2>: the singleton (x) is admitted at bound 1
  std::vector<QRow> gens_x2 = {{qp("x1^2", 1)}};
  ZeroSet s{{pair_at({Quaternion()}, {Quaternion::one()})}};
  VanishingResult vanishing = vanishing_module(s, RingTag::Rational, 1, 1);
  std::vector<QRow> pool = default_candidate_pool(gens_x2, &vanishing.module, 1, 1, 1);
  ClosureResult closure = real_closure_bounded(gens_x2, RingTag::Rational, 1, 1, pool, 1);
  CHECK(closure.module.member({qp("x1", 1)}));
  CHECK(closure.module.same_module(vanishing.module));
  CHECK(closure.certificate.steps.size() == 1);

  // <x^2+y^2>: the pair (x, y) is admitted at bound 1
  std::vector<QRow> gens_ss = {{qp("x1^2 + x2^2", 2)}};
  ZeroSet s2{{pair_at({Quaternion(), Quaternion()}, {Quaternion::one()})}};
  VanishingResult vr2 = vanishing_module(s2, RingTag::Rational, 2, 1);
  std::vector<QRow> pool2 = default_candidate_pool(gens_ss, &vr2.module, 2, 1, 1);
  ClosureResult c2 = real_closure_bounded(gens_ss, RingTag::Rational, 2, 1, pool2, 2);
  CHECK(c2.module.member({qp("x1", 2)}));
  CHECK(c2.module.member({qp("x2", 2)}));
  CHECK(c2.module.same_module(vr2.module));

  // already-real module: nothing is admitted at bound 2
  std::vector<QRow> gens_x = {{qp("x1", 1)}};
  VanishingResult vr3 = vanishing_module(s, RingTag::Rational, 1, 1);
  std::vector<QRow> pool3 = default_candidate_pool(gens_x, &vr3.module, 1, 1, 2);
  ClosureResult c3 = real_closure_bounded(gens_x, RingTag::Rational, 1, 1, pool3, 2);
  CHECK(c3.admitted.empty());
  CHECK(c3.module.same_module(vr3.module));
}

TEST_CASE("closure certificates replay") {
  std::vector<QRow> gens = {{qp("x1^2 + x2^2", 2)}};
  ZeroSet s{{pair_at({Quaternion(), Quaternion()}, {Quaternion::one()})}};
  VanishingResult vanishing = vanishing_module(s, RingTag::Rational, 2, 1);
  std::vector<QRow> pool = default_candidate_pool(gens, &vanishing.module, 2, 1, 1);
  ClosureResult closure = real_closure_bounded(gens, RingTag::Rational, 2, 1, pool, 2);
  CertVerdict replay = verify_certificate(closure.certificate, gens, RingTag::Rational, 2, 1);
  CHECK(replay.accepted);
  CHECK(replay.closure->same_module(closure.module));
}

TEST_CASE("check_nullstellensatz_instance on the basic fixtures") {
  // scalar fixture: generators {x^2}, query x, S = {(0, 1)}
  Instance inst;
  inst.name = "x_squared_inline";
  inst.ring = InstanceRing::Rational;
  inst.nvars = 1;
  inst.rank = 1;
  inst.gen_rows = {{qp("x1^2", 1)}};
  inst.query_rows = {{qp("x1", 1)}};
  inst.zeros.pairs.push_back(pair_at({Quaternion()}, {Quaternion::one()}));
  inst.bound = 2;
  inst.assert_radical_equals_vanishing = true;
  InstanceReport report = check_nullstellensatz_instance(inst);
  CHECK(report.geometric);
  CHECK(report.algebraic);
  CHECK(report.soundness_ok);
  CHECK(report.equality_ok);
  CHECK(report.consistent());

  // non-member query: both verdicts false, still consistent
  Instance neg = inst;
  neg.query_rows = {{qp("1", 1)}};
  neg.assert_radical_equals_vanishing = false;
  neg.expect_geometric = false;
  neg.expect_algebraic = false;
  InstanceReport nreport = check_nullstellensatz_instance(neg);
  CHECK_FALSE(nreport.geometric);
  CHECK_FALSE(nreport.algebraic);
  CHECK(nreport.consistent());

  // expectation mismatch is flagged
  Instance wrong = neg;
  wrong.expect_geometric = true;
  CHECK_FALSE(check_nullstellensatz_instance(wrong).consistent());
}

TEST_CASE("free-ring instance goes through phi") {
  // generators {x - j}, query x^2 + 1, zero at a = j
  Instance inst;
  inst.name = "hx_inline";
  inst.ring = InstanceRing::QuaternionFree;
  inst.nvars = 1;
  inst.rank = 1;
  inst.nc_gen_rows = {{parse_ncpoly("x1 - j", 1)}};
  inst.nc_query_rows = {{parse_ncpoly("x1^2 + 1", 1)}};
  inst.zeros.pairs.push_back(pair_at({Quaternion::j()}, {Quaternion::one()}));
  inst.bound = 1;
  inst.max_tuple = 4;
  inst.assert_radical_equals_vanishing = true;
  InstanceReport report = check_nullstellensatz_instance(inst);
  CHECK(report.geometric);
  CHECK(report.algebraic);
  CHECK(report.soundness_ok);
  CHECK(report.equality_ok);
  CHECK(report.consistent());
}

TEST_CASE("strongly real witness checks") {
  // I = J({(0, 1)}) in 1x1 matrices over Q[x]
  ZeroSet s{{pair_at({Quaternion()}, {Quaternion::one()})}};
  VanishingResult vanishing = vanishing_module(s, RingTag::Rational, 1, 1);
  LeftIdeal ideal{vanishing.module};

  QMat f(1, 1), g(1, 1), h(1, 1);
  f.at(0, 0) = qp("x1", 1);
  g.at(0, 0) = qp("x1^2", 1);
  StronglyRealVerdict v1 = strongly_real_witness_check({f}, ideal, g, h, &s);
  CHECK(v1.decomposition_ok);
  CHECK(v1.g_in_ideal);
  CHECK(v1.h_in_ideal);
  CHECK(v1.accepted);

  // symmetric variant: G = 0, H = x^2 (H* = x^2)
  StronglyRealVerdict v2 = strongly_real_witness_check({f}, ideal, h, g, &s);
  CHECK(v2.accepted);

  // forged decomposition: F = [1] but G + H* = x
  QMat one(1, 1), gx(1, 1);
  one.at(0, 0) = qp("1", 1);
  gx.at(0, 0) = qp("x1", 1);
  StronglyRealVerdict v3 = strongly_real_witness_check({one}, ideal, gx, h, &s);
  CHECK_FALSE(v3.decomposition_ok);
  CHECK_FALSE(v3.accepted);
}

TEST_CASE("reality transfer between the rational and quaternionic ideals") {
  // J = (x, y) presented by the closure of (x^2 + y^2)
  Submodule j(RingTag::Rational, 2, 1, {{qp("x1", 2)}, {qp("x2", 2)}});
  QPoly w = qp("x1 + x2*i", 2);
  RealityTransferVerdict v = reality_transfer_check(j, {w});
  CHECK(v.hypothesis_ok);
  CHECK(v.scalar_identity_ok);
  CHECK(v.scalar_in_ideal);
  CHECK(v.all_components_in);

  // hypothesis failure: w = 1 against J = (x)
  Submodule jx(RingTag::Rational, 1, 1, {{qp("x1", 1)}});
  RealityTransferVerdict bad = reality_transfer_check(jx, {qp("1", 1)});
  CHECK_FALSE(bad.hypothesis_ok);

  // empty witness list: vacuous accept
  RealityTransferVerdict empty = reality_transfer_check(jx, {});
  CHECK(empty.hypothesis_ok);
  CHECK(empty.scalar_identity_ok);
  CHECK(empty.all_components_in);
}

TEST_CASE("vanishing modules never violate realness witnesses") {
  Rng rng(179);
  ZeroSet s{{pair_at({Quaternion(Rat(1)), Quaternion()}, {Quaternion::one(), Quaternion::i()}),
             pair_at({Quaternion(), Quaternion(Rat(2))}, {Quaternion::j(), Quaternion::one()})}};
  VanishingResult vanishing = vanishing_module(s, RingTag::QuaternionCentral, 2, 2);
  for (int t = 0; t < 50; ++t) {
    std::vector<QRow> tuple;
    std::uniform_int_distribution<int> size(1, 2);
    int count = size(rng);
    for (int u = 0; u < count; ++u)
      tuple.push_back({testutil::rand_qpoly(rng, 2, 2, 2), testutil::rand_qpoly(rng, 2, 2, 2)});
    auto verdict = realness_witness_check(tuple, vanishing.module);
    CHECK(verdict.verdict != WitnessVerdict::RealViolated);
  }
}
