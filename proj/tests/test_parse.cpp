#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qnss/parse.hpp"
#include "qnss/print.hpp"
#include "testutil.hpp"

using namespace qnss;
using testutil::Rng;

TEST_CASE("central units commute, free ones do not") {
  QPoly central = parse_qpoly("x1*i - i*x1", 1);
  CHECK(central.is_zero());
  NCPoly free_ring = parse_ncpoly("x1*i - i*x1", 1);
  CHECK_FALSE(free_ring.is_zero());
}

TEST_CASE("free-mode juxtaposition multiplies in order") {
  NCPoly a = parse_ncpoly("2 x1 i x2", 2);
  NCPoly b = parse_ncpoly("2*x1*i*x2", 2);
  CHECK(a == b);
  CHECK_THROWS_AS(parse_qpoly("x1 x2", 2), ParseError);
}

TEST_CASE("matrix literal") {
  QMat m = parse_qmat("[x1, x2; 0, 1]", 2, true);
  CHECK(m.n() == 2);
  CHECK(m.at(0, 0) == QPoly::variable(2, 0));
  CHECK(m.at(1, 1) == QPoly::constant(2, Quaternion::one()));
  CHECK_THROWS_AS(parse_qmat("[x1, x2; 0]", 2, true), ParseError);
  CHECK_THROWS_AS(parse_qmat("[x1, x2]", 2, true), ParseError);  // not square
}

TEST_CASE("quaternion literals") {
  Quaternion q = parse_quaternion("3/2 + 2i - j + 0k");
  CHECK(q == Quaternion(Rat(3, 2), Rat(2), Rat(-1), Rat(0)));
  CHECK(parse_quaternion("-k") == -Quaternion::k());
  CHECK(parse_quaternion("5") == Quaternion(Rat(5)));
  CHECK(parse_quaternion("1/3*i") == Quaternion(Rat(0), Rat(1, 3), Rat(0), Rat(0)));
  Rng rng(111);
  for (int t = 0; t < 100; ++t) {
    Quaternion r = testutil::rand_quat(rng);
    CHECK(parse_quaternion(to_string(r)) == r);
  }
}

TEST_CASE("error positions") {
  try {
    parse_qpoly("x1 +\n  (x2 * ", 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.pos().line == 2);
  }
  try {
    parse_poly("x1 + i", 1);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.pos().line == 1);
    CHECK(e.pos().col == 6);  // the unit is the offending token
  }
  CHECK_THROWS_AS(parse_qpoly("x3", 2), ParseError);       // variable out of range
  CHECK_THROWS_AS(parse_qpoly("x1 + ", 1), ParseError);    // dangling operator
  CHECK_THROWS_AS(parse_qpoly("(x1", 1), ParseError);      // unbalanced
  CHECK_THROWS_AS(parse_qpoly("x1^(2)", 1), ParseError);   // exponent must be an integer
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
}

TEST_CASE("print/parse round trip for commutative polynomials") {
  Rng rng(113);
  for (int t = 0; t < 100; ++t) {
    Poly f = testutil::rand_poly(rng, 2, 3, 4);
    CHECK(parse_poly(to_string(f), 2) == f);
    QPoly g = testutil::rand_qpoly(rng, 2, 3, 3);
    CHECK(parse_qpoly(to_string(g), 2) == g);
  }
}

TEST_CASE("print/parse round trip for free polynomials") {
  Rng rng(127);
  for (int t = 0; t < 100; ++t) {
    NCPoly f = testutil::rand_ncpoly(rng, 2, 3, 3);
    NCPoly reparsed = parse_ncpoly(to_string(f), 2);
    CHECK(reparsed == f);  // equality compares canonical forms
  }
}

TEST_CASE("matrix round trip") {
  Rng rng(131);
  for (int t = 0; t < 20; ++t) {
    QMat m(2, 2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) m.at(r, c) = testutil::rand_qpoly(rng, 2, 2, 2);
    QMat reparsed = parse_qmat(to_string(m), 2, false);
    CHECK(reparsed == m);
  }
}
