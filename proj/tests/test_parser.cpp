#include "doctest.h"
#include "pdq/error.hpp"
#include "pdq/parser.hpp"
#include "pdq/symmetry.hpp"

using namespace pdq;

TEST_CASE("relation text parses to two terms") {
  NCPoly p = parse_ncpoly("y2*y3 - 3*hbar*y1^2");
  CHECK(p.terms().size() == 2);
  CHECK(p.coeff("23") == Scalar(1));
  CHECK(p.coeff("11") == Scalar(-3) * Scalar::param("hbar"));
}

TEST_CASE("potential text") {
  CPoly omega = parse_cpoly("x1^3 + x1^2*x3 + x2^2*x3");
  CPoly x1 = CPoly::variable(1), x2 = CPoly::variable(2), x3 = CPoly::variable(3);
  CHECK(omega == x1.pow(3) + x1.pow(2) * x3 + x2.pow(2) * x3);
  CHECK(omega.is_homogeneous(3));
}

TEST_CASE("syntax errors carry an offset") {
  try {
    parse_ncpoly("(y1");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(e.offset() == 3);
  }
  CHECK_THROWS_AS(parse_ncpoly("y1 +"), SyntaxError);
  CHECK_THROWS_AS(parse_scalar("2*"), SyntaxError);
}

TEST_CASE("alphabet mismatch") {
  try {
    parse_cpoly("y1*x2");
    FAIL("expected AlphabetMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AlphabetMismatch);
  }
}

TEST_CASE("scalars and matrices") {
  Scalar h = Scalar::param("hbar");
  CHECK(parse_scalar("(1-hbar)/(1+hbar)") == (Scalar(1) - h) / (Scalar(1) + h));
  CHECK(parse_scalar("zeta{3}^3") == Scalar(1));
  CHECK(parse_scalar("sqrt3^2") == Scalar(3));
  GradedMap m = parse_matrix("[-1,0,0; 0,1,0; 2,0,1]");
  CHECK(m[0][0] == Scalar(-1));
  CHECK(m[2][0] == Scalar(2));
  CHECK(map_det(m) == Scalar(-1));
}

TEST_CASE("printing round-trips") {
  for (const char* s : {"y2*y3 - 3*hbar*y1^2", "(1-hbar)/(1+hbar)*y1*y2", "y3^2 + lambda*y1*y2 - 2*y1"}) {
    NCPoly p = parse_ncpoly(s);
    CHECK(parse_ncpoly(p.to_string()) == p);
  }
  CPoly c = parse_cpoly("x1^2*x2 - 3/2*x3^3 + zeta{4}*x1*x2*x3");
  CHECK(parse_cpoly(c.to_string()) == c);
}
