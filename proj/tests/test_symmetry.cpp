#include "doctest.h"
#include "pdq/error.hpp"
#include "pdq/parser.hpp"
#include "pdq/symmetry.hpp"

using namespace pdq;

namespace {

PoissonStructure ps_of(const char* omega) { return PoissonStructure::from_potential(parse_cpoly(omega)); }
RewriteSystem rs_of(const PoissonStructure& ps) { return RewriteSystem::derive(structure_constants(ps)); }
GradedMap M(const char* s) { return parse_matrix(s); }

const GradedMap cyclic = parse_matrix("[0,1,0; 0,0,1; 1,0,0]");

}  // namespace

TEST_CASE("applying maps") {
  CPoly p = parse_cpoly("x1^2*x3 - 2*x2*x3^2");
  CHECK(apply_map(identity_map(), p) == p);
  CHECK(apply_map(M("[-1,0,0; 0,1,0; 2,0,1]"), NCPoly::variable(3)) == parse_ncpoly("2*y1 + y3"));
  CHECK(apply_map(diagonal_map(2, 3, 5), parse_cpoly("x1*x2")) == parse_cpoly("6*x1*x2"));
  NCPoly w = parse_ncpoly("y2*y1");
  CHECK(apply_map(cyclic, w) == parse_ncpoly("y3*y2"));
}

TEST_CASE("composition follows the row convention") {
  GradedMap a = M("[1,1,0; 0,1,0; 0,0,1]"), b = diagonal_map(2, 3, 5);
  CPoly x1 = CPoly::variable(1);
  CHECK(apply_map(a * b, x1) == apply_map(b, apply_map(a, x1)));
  CHECK(map_equal(a * map_inverse(a), identity_map()));
  CHECK(map_det(a * b) == Scalar(30));
  CHECK(map_equal(map_pow(cyclic, 3), identity_map()));
}

TEST_CASE("automorphism predicates") {
  auto c2 = ps_of("x1^2*x2");
  auto r2 = rs_of(c2);
  GradedMap fam = M("[2,0,0; 0,3,0; 1,5,2]");
  CHECK(is_poisson_automorphism(fam, c2));
  CHECK(is_algebra_automorphism(fam, r2));
  CHECK(correspondence_check(fam, c2, r2) == std::pair{true, true});
  CHECK(correspondence_check(identity_map(), c2, r2) == std::pair{true, true});

  auto c1 = ps_of("x1^3");
  auto r1 = rs_of(c1);
  CHECK_FALSE(is_poisson_automorphism(cyclic, c1));
  CHECK_FALSE(is_algebra_automorphism(cyclic, r1));
  CHECK(correspondence_check(cyclic, c1, r1) == std::pair{false, false});

  // symbolic family of the second case
  GradedMap sym = M("[a,0,0; 0,b,0; c,d,a]");
  CHECK(correspondence_check(sym, c2, r2) == std::pair{true, true});
}

TEST_CASE("matrix orders") {
  CHECK(matrix_order(diagonal_map(1, -1, 1)) == 2);
  CHECK(matrix_order(diagonal_map(1, Scalar::zeta(3), Scalar::zeta(3).pow(2))) == 3);
  CHECK(matrix_order(identity_map()) == 1);
  CHECK_FALSE(matrix_order(M("[1,1,0; 0,1,0; 0,0,1]"), 64).has_value());
  Scalar r = Scalar::sqrt3();
  GradedMap m = {{{Scalar::rational(-1, 2), r / Scalar(2), Scalar(0)},
                  {-r / Scalar(2), Scalar::rational(-1, 2), Scalar(0)},
                  {Scalar::rational(9, 8), Scalar(-3) * r / Scalar(8), Scalar(1)}}};
  CHECK_FALSE(map_equal(map_pow(m, 4), identity_map()));
}

TEST_CASE("group closure") {
  CHECK(group_closure({diagonal_map(1, -1, 1)}).order() == 2);
  auto s3 = group_closure({M("[0,-1,0; -1,0,0; 0,0,1]"), M("[-1,0,0; 1,1,0; 0,0,1]")});
  CHECK(s3.order() == 6);
  CHECK(map_equal(s3.elements.front(), identity_map()));
  try {
    group_closure({M("[1,1,0; 0,1,0; 0,0,1]")}, 100);
    FAIL("expected ClosureExceedsCap");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ClosureExceedsCap);
  }
}
