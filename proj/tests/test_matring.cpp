#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qnss/matring.hpp"
#include "qnss/parse.hpp"
#include "testutil.hpp"

using namespace qnss;
using testutil::Rng;

namespace {

QMat rand_qmat(Rng& rng, int nvars, int n, int deg = 2, int terms = 2) {
  QMat m(nvars, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = testutil::rand_qpoly(rng, nvars, deg, terms);
  return m;
}

NCMat rand_ncmat(Rng& rng, int nvars, int n) {
  std::vector<std::vector<NCPoly>> rows;
  for (int r = 0; r < n; ++r) {
    std::vector<NCPoly> row;
    for (int c = 0; c < n; ++c) row.push_back(testutil::rand_ncpoly(rng, nvars, 2, 2));
    rows.push_back(std::move(row));
  }
  return NCMat(std::move(rows));
}

}  // namespace

TEST_CASE("conjugate transpose is an involutive anti-automorphism") {
  Rng rng(137);
  for (int t = 0; t < 30; ++t) {
    QMat f = rand_qmat(rng, 2, 2);
    QMat g = rand_qmat(rng, 2, 2);
    CHECK(f.involute().involute() == f);
    CHECK((f * g).involute() == g.involute() * f.involute());
  }
  for (int t = 0; t < 15; ++t) {
    NCMat f = rand_ncmat(rng, 1, 2);
    NCMat g = rand_ncmat(rng, 1, 2);
    CHECK(f.involute().involute() == f);
    CHECK((f * g).involute() == g.involute() * f.involute());
  }
}

TEST_CASE("matrix evaluation") {
  QMat id = QMat::identity(1, 2);
  QuatVec v = {Quaternion::i(), Quaternion(Rat(2))};
  std::vector<Rat> a = {Rat(5)};
  CHECK(mat_evaluate(id, a, v) == v);

  QMat diag(1, 2);
  diag.at(0, 0) = QPoly::variable(1, 0);
  diag.at(1, 1) = QPoly::variable(1, 0);
  std::vector<Rat> zero = {Rat(0)};
  QuatVec ones = {Quaternion::one(), Quaternion::one()};
  QuatVec out = mat_evaluate(diag, zero, ones);
  CHECK(out[0].is_zero());
  CHECK(out[1].is_zero());

  // NC entry x1 * i at a = (j): ji = -k
  NCMat f(1, 1);
  f.at(0, 0) = NCPoly::variable(1, 0) * NCPoly::constant(1, Quaternion::i());
  std::vector<Quaternion> at_j = {Quaternion::j()};
  QuatVec w = {Quaternion::one()};
  CHECK(mat_evaluate(f, at_j, w) == QuatVec{-Quaternion::k()});
}

TEST_CASE("phi_n") {
  NCMat id = NCMat::identity(1, 2);
  CHECK(phi_n(id) == QMat::identity(4, 2));

  NCMat x(1, 1);
  x.at(0, 0) = NCPoly::variable(1, 0);
  QMat img = phi_n(x);
  CHECK(img.at(0, 0) == phi(NCPoly::variable(1, 0)));

  Rng rng(139);
  for (int t = 0; t < 20; ++t) {
    NCMat f = rand_ncmat(rng, 1, 2);
    CHECK(phi_n(f.involute()) == phi_n(f).involute());
    NCMat g = rand_ncmat(rng, 1, 2);
    CHECK(phi_n(f * g) == phi_n(f) * phi_n(g));
    // evaluation transport: F(a)v = phi_n(F)(rho(a)) v
    std::vector<Quaternion> a = testutil::rand_quat_point(rng, 1);
    QuatVec v = {testutil::rand_quat(rng, 2), testutil::rand_quat(rng, 2)};
    CHECK(mat_evaluate(f, a, v) == mat_evaluate(phi_n(f), rho(a), v));
  }
}

TEST_CASE("row ideal of the identity is the unit ideal") {
  LeftIdeal unit = ideal_of_rows(RingTag::QuaternionCentral, {QMat::identity(2, 2)});
  CHECK(unit.rows.is_full());
  Rng rng(149);
  CHECK(unit.contains(rand_qmat(rng, 2, 2, 1, 1)));

  QMat zero(2, 2);
  LeftIdeal trivial = ideal_of_rows(RingTag::Rational, {zero});
  CHECK(trivial.rows.is_zero_module());
  CHECK(trivial.contains(zero));
}

TEST_CASE("the twisted-row module as a left ideal") {
  QMat p = parse_qmat("[x1^2, x1*x2; x1*x2, x2^2]", 2, true);
  LeftIdeal ideal = ideal_of_rows(RingTag::Rational, {p});
  CHECK(ideal.contains(p));
  QMat q = parse_qmat("[x1, x2; 0, 0]", 2, true);
  CHECK_FALSE(ideal.contains(q));
}

TEST_CASE("left multiplication stays inside the ideal") {
  Rng rng(151);
  QMat p = parse_qmat("[x1^2, x1*x2; x1*x2, x2^2]", 2, true);
  LeftIdeal ideal = ideal_of_rows(RingTag::Rational, {p});
  for (int t = 0; t < 10; ++t) {
    QMat g(2, 2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        Poly f = testutil::rand_poly(rng, 2, 2, 2);
        g.at(r, c) = QPoly::from_poly(f);
      }
    CHECK(ideal.contains(g * p));
  }
}

TEST_CASE("hermitian square rows") {
  // identity: the k-th combination is e_k
  std::vector<QRow> rows = hermitian_square_rows({QMat::identity(2, 2)});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0][0] == QPoly::constant(2, Quaternion::one()));
  CHECK(rows[0][1].is_zero());
  CHECK(rows[1][1] == QPoly::constant(2, Quaternion::one()));

  // all zero
  for (const QRow& r : hermitian_square_rows({QMat(2, 2)})) CHECK(qrow_is_zero(r));

  // single nonzero row f: combinations are the rows of F* F
  Rng rng(157);
  for (int t = 0; t < 20; ++t) {
    QRow f = {testutil::rand_qpoly(rng, 2, 2, 2), testutil::rand_qpoly(rng, 2, 2, 2)};
    QMat fm = first_row_matrix(f);
    QMat square = fm.involute() * fm;
    std::vector<QRow> combos = hermitian_square_rows({fm});
    for (int k = 0; k < 2; ++k) CHECK(combos[k] == square.row(k));
  }

  // several matrices: the rows of sum A_i* A_i
  for (int t = 0; t < 10; ++t) {
    std::vector<QMat> mats = {rand_qmat(rng, 2, 2), rand_qmat(rng, 2, 2)};
    QMat total(2, 2);
    for (const QMat& m : mats) total = total + m.involute() * m;
    std::vector<QRow> combos = hermitian_square_rows(mats);
    for (int k = 0; k < 2; ++k) CHECK(combos[k] == total.row(k));
  }
}

TEST_CASE("witness transport between rows and matrices") {
  Rng rng(163);
  for (int t = 0; t < 10; ++t) {
    // a random module and a tuple of rows inside it
    std::vector<QRow> gens;
    for (int g = 0; g < 2; ++g)
      gens.push_back(
          {testutil::rand_sparse_qpoly(rng, 2, 1), testutil::rand_sparse_qpoly(rng, 2, 1)});
    Submodule n(RingTag::QuaternionCentral, 2, 2, gens);
    LeftIdeal ideal{n};

    std::vector<QRow> tuple;
    std::vector<QMat> lifted;
    for (int s = 0; s < 2; ++s) {
      QRow f = qrow_zero(2, 2);
      for (const QRow& g : gens)
        f = qrow_add(std::move(f), qrow_left_mul(testutil::rand_qpoly(rng, 2, 1, 1), g));
      tuple.push_back(f);
      lifted.push_back(first_row_matrix(f));
    }
    // rows in N <=> lifted matrices in I
    for (std::size_t s = 0; s < tuple.size(); ++s) {
      CHECK(n.member(tuple[s]));
      CHECK(ideal.contains(lifted[s]));
    }
    // matrix hermitian squares land in I, and their rows in N
    QMat total(2, 2);
    for (const QMat& m : lifted) total = total + m.involute() * m;
    CHECK(ideal.contains(total));
    for (const QRow& h : hermitian_square_rows(lifted)) CHECK(n.member(h));
    // row hermitian combinations agree with the matrix rows
    std::vector<QRow> herms = hermitian_row_combinations(tuple);
    for (int k = 0; k < 2; ++k) CHECK(herms[k] == total.row(k));
  }
}
