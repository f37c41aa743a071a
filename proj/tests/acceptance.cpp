// Acceptance suite: one pass/fail line per criterion. Usage:
//   acceptance <path-to-qnss-cli> <fixtures-dir>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qnss/instance.hpp"
#include "qnss/nss.hpp"
#include "qnss/parse.hpp"
#include "qnss/print.hpp"
#include "testutil.hpp"

using namespace qnss;
using testutil::Rng;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string what)
      : number_(number), what_(std::move(what)), start_(std::chrono::steady_clock::now()) {}

  void fail(const std::string& why) {
    if (!failed_) first_error_ = why;
    failed_ = true;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  void finish(double seconds_limit = 0.0) {
    double elapsed = seconds();
    if (seconds_limit > 0 && elapsed > seconds_limit) {
      fail("runtime " + std::to_string(elapsed) + "s exceeds " +
           std::to_string(seconds_limit) + "s");
    }
    char line[512];
    std::snprintf(line, sizeof(line), "%s criterion %d: %s (%.2fs)%s%s",
                  failed_ ? "FAIL" : "PASS", number_, what_.c_str(), elapsed,
                  failed_ ? " -- " : "", failed_ ? first_error_.c_str() : "");
    std::cout << line << "\n";
    if (failed_) ++g_failures;
  }

 private:
  int number_;
  std::string what_;
  std::chrono::steady_clock::time_point start_;
  bool failed_ = false;
  std::string first_error_;
};

std::vector<std::string> fixture_files(const std::string& dir) {
  std::vector<std::string> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") out.push_back(entry.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void criterion1_quaternion_kernel() {
  Criterion crit(1, "quaternion kernel randomized laws, 1000 cases");
  Rng rng(1001);
  for (int t = 0; t < 1000; ++t) {
    Quaternion p = testutil::rand_quat(rng);
    Quaternion q = testutil::rand_quat(rng);
    Quaternion r = testutil::rand_quat(rng);
    crit.require((p * q) * r == p * (q * r), "associativity");
    crit.require((p * q).norm() == p.norm() * q.norm(), "norm multiplicativity");
    crit.require((p * q).conjugate() == q.conjugate() * p.conjugate(),
                 "conjugation anti-automorphism");
    for (int idx = 1; idx <= 4; ++idx) {
      crit.require(component_extract(p, idx) == p.component(idx),
                   "component extraction");
    }
  }
  crit.finish(5.0);
}

void criterion2_subspace_duality() {
  Criterion crit(2, "left/right subspace correspondence, 200 cases");
  Rng rng(1002);
  std::uniform_int_distribution<std::size_t> mdist(1, 4);
  std::uniform_int_distribution<int> gdist(0, 3);
  for (int t = 0; t < 200; ++t) {
    std::size_t m = mdist(rng);
    std::vector<QuatVec> gens;
    int count = gdist(rng);
    for (int g = 0; g < count; ++g) {
      QuatVec v;
      for (std::size_t c = 0; c < m; ++c) v.push_back(testutil::rand_quat(rng, 3));
      gens.push_back(v);
    }
    QuatSubspace s(Side::Left, m, gens);
    QuatSubspace ann = annihilator(s);
    crit.require(s.dim() + ann.dim() == m, "dim S + dim S° = m");
    crit.require(annihilator(ann) == s, "(S°)_o = S");
  }
  crit.finish();
}

void criterion3_phi_contract() {
  Criterion crit(3, "phi is a *-isomorphism onto its image and f(a) = phi(f)(rho(a)), 500 cases");
  Rng rng(1003);
  for (int t = 0; t < 500; ++t) {
    NCPoly f = testutil::rand_ncpoly(rng, 2, 3, 3);
    NCPoly g = testutil::rand_ncpoly(rng, 2, 3, 3);
    std::vector<Quaternion> a = testutil::rand_quat_point(rng, 2);
    crit.require(phi(f + g) == phi(f) + phi(g), "additivity");
    crit.require(phi(f * g) == phi(f) * phi(g), "multiplicativity");
    crit.require(phi(f.conjugate()) == phi(f).involute(), "involution transport");
    crit.require(f.evaluate(a) == phi(f).evaluate(rho(a)), "evaluation identity");
  }
  crit.finish();
}

void criterion4_conjugation_formula() {
  Criterion crit(4, "pointwise conjugation formula at 100 random points");
  Rng rng(1004);
  for (int t = 0; t < 100; ++t) {
    NCPoly f = testutil::rand_ncpoly(rng, 2, 3, 3);
    std::vector<Quaternion> a = testutil::rand_quat_point(rng, 2);
    crit.require(f.conjugate().evaluate(a) == f.evaluate(a).conjugate(),
                 "conjugate evaluates to the pointwise conjugate");
  }
  crit.finish();
}

void criterion5_twisted_rows() {
  Criterion crit(5, "the non-real twisted-row module");
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  QRow g1 = {QPoly::from_poly(x * x), QPoly::from_poly(x * y)};
  QRow g2 = {QPoly::from_poly(x * y), QPoly::from_poly(y * y)};
  Submodule n(RingTag::Rational, 2, 2, {g1, g2});
  QRow xy = {QPoly::from_poly(x), QPoly::from_poly(y)};
  crit.require(!n.member(xy), "(x, y) is not a member");
  crit.require(colon_module(n).is_zero_module(), "(N : R^2) = 0");
  auto witness = realness_witness_check({xy}, n);
  crit.require(witness.verdict == WitnessVerdict::RealViolated, "witness verdict");
  crit.finish(1.0);
}

void criterion6_witness_transport() {
  Criterion crit(6, "witness transport between rows and matrices, 100 instances");
  Rng rng(1006);
  for (int t = 0; t < 100; ++t) {
    std::vector<QRow> gens;
    for (int g = 0; g < 2; ++g)
      gens.push_back(
          {testutil::rand_sparse_qpoly(rng, 2, 1), testutil::rand_sparse_qpoly(rng, 2, 1)});
    Submodule n(RingTag::QuaternionCentral, 2, 2, gens);
    LeftIdeal ideal{n};

    // row witnesses -> matrix witnesses via the first-row lifting
    std::vector<QRow> tuple;
    std::vector<QMat> lifted;
    for (int s = 0; s < 2; ++s) {
      QRow f = qrow_zero(2, 2);
      for (const QRow& g : gens)
        f = qrow_add(std::move(f), qrow_left_mul(testutil::rand_qpoly(rng, 2, 1, 1), g));
      tuple.push_back(f);
      lifted.push_back(first_row_matrix(f));
    }
    QMat total(2, 2);
    for (const QMat& m : lifted) total = total + m.involute() * m;
    crit.require(ideal.contains(total), "sum F_i* F_i lands in I");
    for (std::size_t s = 0; s < tuple.size(); ++s) {
      crit.require(n.member(tuple[s]) == ideal.contains(lifted[s]),
                   "membership transports through the lifting");
    }

    // matrix witnesses -> row witnesses via hermitian_square_rows
    std::vector<QRow> herms = hermitian_square_rows(lifted);
    for (int k = 0; k < 2; ++k) {
      crit.require(herms[k] == total.row(k), "hermitian rows are the rows of the sum");
      crit.require(n.member(herms[k]), "hermitian rows land in N");
    }

    // negative transport: a random matrix is in I iff all rows are in N
    QMat probe(2, 2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) probe.at(r, c) = testutil::rand_qpoly(rng, 2, 1, 2);
    bool rows_in = n.member(probe.row(0)) && n.member(probe.row(1));
    crit.require(ideal.contains(probe) == rows_in, "matrix membership is rowwise");
  }
  crit.finish();
}

void criterion7_instance_suite(const std::string& fixtures) {
  Criterion crit(7, "Nullstellensatz instance suite");
  std::vector<std::string> files = fixture_files(fixtures);
  crit.require(files.size() >= 10, "at least 10 fixtures");
  int equality_fixtures = 0;
  for (const std::string& file : files) {
    Instance inst = load_instance(file);
    InstanceReport report = check_nullstellensatz_instance(inst);
    crit.require(report.zero_set_valid, inst.name + ": zero set validates");
    crit.require(report.soundness_ok, inst.name + ": soundness");
    crit.require(report.expectations_ok, inst.name + ": expected verdicts");
    if (inst.assert_radical_equals_vanishing) {
      ++equality_fixtures;
      crit.require(report.equality_ok, inst.name + ": closure equals vanishing module");
    }
    crit.require(report.consistent(), inst.name + ": consistent");
  }
  crit.require(equality_fixtures >= 2, "at least two known-radical fixtures");
  crit.finish(60.0);
}

void criterion8_hc_cross_validation() {
  Criterion crit(8, "H_c membership vs dense elimination oracle, 50 instances");
  Rng rng(1008);
  int instances = 0;
  while (instances < 50) {
    std::uniform_int_distribution<int> rank_dist(1, 2), deg(0, 1);
    int rank = rank_dist(rng);
    std::vector<QRow> gens;
    std::uniform_int_distribution<int> gcount(1, 2);
    int count = gcount(rng);
    for (int g = 0; g < count; ++g) {
      QRow row;
      for (int c = 0; c < rank; ++c) row.push_back(testutil::rand_sparse_qpoly(rng, 2, 1));
      gens.push_back(row);
    }
    Submodule n(RingTag::QuaternionCentral, 2, rank, gens);
    ++instances;
    for (int probe = 0; probe < 3; ++probe) {
      QRow f;
      if (probe == 0) {
        f = qrow_zero(2, rank);
        for (const QRow& g : gens)
          f = qrow_add(std::move(f), qrow_left_mul(testutil::rand_qpoly(rng, 2, 2, 1), g));
      } else {
        for (int c = 0; c < rank; ++c) f.push_back(testutil::rand_qpoly(rng, 2, 2, 2));
      }
      bool groebner_says = n.member(f);
      bool oracle_says = testutil::dense_member_oracle(f, gens, 2, 4);
      crit.require(groebner_says == oracle_says, "verdicts agree");
    }
  }
  crit.finish();
}

void criterion9_vanishing_reality() {
  Criterion crit(9, "vanishing modules are real in the witness sense; reality transfer");
  Rng rng(1009);
  ZeroSet s;
  s.pairs.push_back({{Quaternion(Rat(1)), Quaternion()},
                     {Quaternion::one(), Quaternion::i()},
                     ZeroProvenance::Fixture});
  s.pairs.push_back({{Quaternion(), Quaternion(Rat(2))},
                     {Quaternion::j(), Quaternion::one()},
                     ZeroProvenance::Fixture});
  s.pairs.push_back({{Quaternion(Rat(-1)), Quaternion(Rat(1))},
                     {Quaternion::one(), Quaternion()},
                     ZeroProvenance::Fixture});
  VanishingResult vanishing = vanishing_module(s, RingTag::QuaternionCentral, 2, 2);
  std::uniform_int_distribution<int> size(1, 2);
  for (int t = 0; t < 200; ++t) {
    std::vector<QRow> tuple;
    int count = size(rng);
    for (int u = 0; u < count; ++u)
      tuple.push_back({testutil::rand_qpoly(rng, 2, 2, 2), testutil::rand_qpoly(rng, 2, 2, 2)});
    auto verdict = realness_witness_check(tuple, vanishing.module);
    crit.require(verdict.verdict != WitnessVerdict::RealViolated,
                 "no witness violates a vanishing module");
  }

  // reality transfer fixtures
  Submodule j(RingTag::Rational, 2, 1,
              {{parse_qpoly("x1", 2)}, {parse_qpoly("x2", 2)}});
  RealityTransferVerdict good = reality_transfer_check(j, {parse_qpoly("x1 + x2*i", 2)});
  crit.require(good.hypothesis_ok && good.scalar_identity_ok && good.scalar_in_ideal &&
                   good.all_components_in,
               "transfer fixture accepted");
  Submodule jx(RingTag::Rational, 1, 1, {{parse_qpoly("x1", 1)}});
  RealityTransferVerdict forged = reality_transfer_check(jx, {parse_qpoly("1", 1)});
  crit.require(!forged.hypothesis_ok, "forged hypothesis rejected");
  RealityTransferVerdict vacuous = reality_transfer_check(jx, {});
  crit.require(vacuous.hypothesis_ok && vacuous.all_components_in, "vacuous accept");
  crit.finish();
}

int run_cli(const std::string& cli, const std::string& args, const std::string& outfile) {
  std::string cmd = cli + " " + args + " > " + outfile + " 2>&1";
  int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void roundtrip_expressions(Criterion& crit, const nlohmann::json& node,
                           InstanceRing ring, int nvars) {
  auto check_expr = [&](const std::string& text) {
    if (ring == InstanceRing::QuaternionFree) {
      NCPoly f = parse_ncpoly(text, nvars);
      crit.require(parse_ncpoly(to_string(f), nvars) == f, "free round trip: " + text);
    } else if (ring == InstanceRing::Rational) {
      Poly f = parse_poly(text, nvars);
      crit.require(parse_poly(to_string(f), nvars) == f, "rational round trip: " + text);
    } else {
      QPoly f = parse_qpoly(text, nvars);
      crit.require(parse_qpoly(to_string(f), nvars) == f, "central round trip: " + text);
    }
  };
  auto walk_rows = [&](const nlohmann::json& rows) {
    for (const auto& row : rows) {
      if (row.is_string()) {
        check_expr(row.get<std::string>());
      } else {
        for (const auto& e : row) check_expr(e.get<std::string>());
      }
    }
  };
  if (node.contains("generators")) walk_rows(node["generators"]);
  if (node.contains("query")) walk_rows(nlohmann::json::array({node["query"]}));
  if (node.contains("zeros")) {
    for (const auto& z : node["zeros"]) {
      for (const auto& c : z["point"]) {
        Quaternion q = parse_quaternion(c.get<std::string>());
        crit.require(parse_quaternion(to_string(q)) == q, "quaternion literal round trip");
      }
      for (const auto& c : z["vector"]) {
        Quaternion q = parse_quaternion(c.get<std::string>());
        crit.require(parse_quaternion(to_string(q)) == q, "quaternion literal round trip");
      }
    }
  }
}

void criterion10_cli(const std::string& cli, const std::string& fixtures) {
  Criterion crit(10, "CLI round trips and byte-stable golden reports");
  // parse/print round trip across the whole corpus
  for (const std::string& file : fixture_files(fixtures)) {
    std::ifstream in(file);
    nlohmann::json doc = nlohmann::json::parse(in);
    std::string ring = doc.value("ring", "q");
    InstanceRing tag = ring == "hx"   ? InstanceRing::QuaternionFree
                       : ring == "hc" ? InstanceRing::QuaternionCentral
                                      : InstanceRing::Rational;
    roundtrip_expressions(crit, doc, tag, doc.at("vars").get<int>());
  }

  // byte stability: two consecutive runs over the corpus agree exactly
  std::string tmp = fs::temp_directory_path().string();
  for (const std::string& format : {std::string("text"), std::string("json")}) {
    std::string out1 = tmp + "/qnss_golden_1_" + format + ".txt";
    std::string out2 = tmp + "/qnss_golden_2_" + format + ".txt";
    int rc1 = run_cli(cli, "check-instance --all " + fixtures + " --format " + format, out1);
    int rc2 = run_cli(cli, "check-instance --all " + fixtures + " --format " + format, out2);
    crit.require(rc1 == 0, "check-instance exits 0 on the corpus (" + format + ")");
    crit.require(rc1 == rc2, "stable exit code");
    std::string a = slurp(out1), b = slurp(out2);
    crit.require(!a.empty() && a == b, "byte-identical reports (" + format + ")");
  }

  // documented CLI behaviors
  std::string out = tmp + "/qnss_cli_probe.txt";
  int rc = run_cli(cli, "eval --ring hx -d 1 --expr \"x1*i\" --point \"j\"", out);
  crit.require(rc == 0 && slurp(out) == "-k\n", "eval x1*i at j prints -k");
  rc = run_cli(cli, "member " + fixtures + "/twisted_rows_matrix.json", out);
  crit.require(rc == 1, "member exits 1 on the twisted-row query");
  rc = run_cli(cli, "check-instance " + fixtures + "/scalar_x_squared.json", out);
  crit.require(rc == 0, "check-instance exits 0 on the x-squared fixture");
  rc = run_cli(cli, "verify-cert " + fixtures + "/bogus_cert.json", out);
  crit.require(rc == 1, "verify-cert rejects the bogus certificate");
  rc = run_cli(cli, "eval --ring q -d 1 --expr \"x1^\" --point \"0\"", out);
  crit.require(rc == 2, "syntax errors exit 2");
  crit.finish();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <qnss-cli> <fixtures-dir>\n";
    return 64;
  }
  const std::string cli = argv[1];
  const std::string fixtures = argv[2];

  criterion1_quaternion_kernel();
  criterion2_subspace_duality();
  criterion3_phi_contract();
  criterion4_conjugation_formula();
  criterion5_twisted_rows();
  criterion6_witness_transport();
  criterion7_instance_suite(fixtures);
  criterion8_hc_cross_validation();
  criterion9_vanishing_reality();
  criterion10_cli(cli, fixtures);

  if (g_failures == 0) {
    std::cout << "all criteria passed\n";
  } else {
    std::cout << g_failures << " criterion(s) failed\n";
  }
  return g_failures;
}
