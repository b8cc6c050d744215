#include "doctest.h"
#include "pdq/error.hpp"
#include "pdq/parser.hpp"
#include "pdq/poisson.hpp"

using namespace pdq;

namespace {

CPoly P(const char* s) { return parse_cpoly(s); }

PoissonStructure case7() { return PoissonStructure::from_potential(P("1/3*x1^3 + 1/3*x2^3 + 1/3*x3^3 + lambda*x1*x2*x3")); }

}  // namespace

TEST_CASE("brackets from potentials") {
  auto c1 = PoissonStructure::from_potential(P("x1^3"));
  CHECK(c1.b12().is_zero());
  CHECK(c1.b23() == P("3*x1^2"));
  CHECK(c1.b31().is_zero());

  auto c2 = PoissonStructure::from_potential(P("x1^2*x2"));
  CHECK(c2.b12().is_zero());
  CHECK(c2.b23() == P("2*x1*x2"));
  CHECK(c2.b31() == P("x1^2"));

  auto zero = PoissonStructure::from_potential(CPoly{});
  CHECK(zero.b12().is_zero());
  CHECK(structure_constants(zero).empty());

  CHECK_THROWS_AS(PoissonStructure::from_potential(P("x1^2")), Error);
  CHECK_THROWS_AS(PoissonStructure::from_potential(P("x1^3 + x2^2")), Error);
}

TEST_CASE("Leibniz and antisymmetry") {
  auto c3 = PoissonStructure::from_potential(P("x1*x2*x3"));
  CHECK(poisson_bracket(c3, P("x1"), P("x2")) == P("x1*x2"));
  auto c2 = PoissonStructure::from_potential(P("x1^2*x2"));
  CHECK(poisson_bracket(c2, P("x3"), P("x1^2")) == P("2*x1^3"));
  CPoly f = P("x1*x2 + x3^2");
  CHECK(poisson_bracket(c2, f, f).is_zero());
  CHECK(c2.bracket(3, 2) == -c2.b23());
  CHECK(c2.bracket(1, 1).is_zero());
}

TEST_CASE("Jacobi identity") {
  CHECK(jacobi_check(case7()));
  CHECK(jacobi_check(PoissonStructure::from_potential(CPoly{})));
  for (const char* omega : {"x1^3", "x1^2*x2", "x1*x2*x3", "x1^2*x3 + x1*x2^2", "x1^3 + x1^2*x3 + x2^2*x3"})
    CHECK(jacobi_check(PoissonStructure::from_potential(P(omega))));

  PoissonStructure bad(P("x2^2"), P("x3^2"), CPoly{});
  CHECK_FALSE(jacobi_check(bad));
  // cyclic sum {x1,{x2,x3}} + {x2,{x3,x1}} + {x3,{x1,x2}}
  CPoly x1 = P("x1"), x2 = P("x2"), x3 = P("x3");
  CPoly sum = poisson_bracket(bad, x1, poisson_bracket(bad, x2, x3)) +
              poisson_bracket(bad, x2, poisson_bracket(bad, x3, x1)) +
              poisson_bracket(bad, x3, poisson_bracket(bad, x1, x2));
  CHECK(sum == P("-2*x2*x3^2"));
}

TEST_CASE("structure constants") {
  auto c1 = structure_constants(PoissonStructure::from_potential(P("x1^3")));
  REQUIRE(c1.size() == 1);
  REQUIRE(c1.at({2, 3}).size() == 1);
  CHECK(c1.at({2, 3}).at({1, 1}) == Scalar(3));

  auto c7 = structure_constants(case7());
  CHECK(c7.at({1, 2}).at({3, 3}) == Scalar(1));
  CHECK(c7.at({1, 2}).at({1, 2}) == Scalar::param("lambda"));
  CHECK(c7.at({2, 3}).at({1, 1}) == Scalar(1));
  CHECK(c7.at({1, 3}).at({2, 2}) == Scalar(-1));

  PoissonStructure back = PoissonStructure::from_constants(c7);
  CHECK(back.b12() == case7().b12());
  CHECK(back.b31() == case7().b31());
}
