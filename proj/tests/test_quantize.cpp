#include "doctest.h"
#include "pdq/error.hpp"
#include "pdq/parser.hpp"
#include "pdq/quantize.hpp"

using namespace pdq;

namespace {

NCPoly Y(const char* s) { return parse_ncpoly(s); }

RewriteSystem from_omega(const char* omega) {
  return RewriteSystem::derive(structure_constants(PoissonStructure::from_potential(parse_cpoly(omega))));
}

const Scalar q = (Scalar(1) - Scalar::param("hbar")) / (Scalar(1) + Scalar::param("hbar"));

}  // namespace

TEST_CASE("normal basis") {
  CHECK(basis(0) == std::vector<Word>{""});
  CHECK(basis(1) == std::vector<Word>{"1", "2", "3"});
  CHECK(basis(2).size() == 6);
  for (int d = 0; d <= 8; ++d) CHECK(basis_dim(d) == static_cast<std::size_t>((d + 1) * (d + 2) / 2));
  CHECK(is_normal_word("1123"));
  CHECK_FALSE(is_normal_word("21"));
}

TEST_CASE("derived rules") {
  RewriteSystem c1 = from_omega("x1^3");
  CHECK(c1.rule(2, 1) == Y("y1*y2"));
  CHECK(c1.rule(3, 1) == Y("y1*y3"));
  CHECK(c1.rule(3, 2) == Y("y2*y3 - 3*hbar*y1^2"));

  RewriteSystem c3 = from_omega("2*x1*x2*x3");
  CHECK(c3.rule(2, 1) == Y("y1*y2").scaled(q));
  CHECK(c3.rule(3, 2) == Y("y2*y3").scaled(q));
  CHECK(c3.rule(3, 1) == Y("y1*y3").scaled(q.inv()));

  RewriteSystem sym = RewriteSystem::derive({});
  CHECK(sym.rule(2, 1) == Y("y1*y2"));
  CHECK(sym.rule(3, 2) == Y("y2*y3"));
}

TEST_CASE("normal forms") {
  RewriteSystem c1 = from_omega("x1^3");
  CHECK(c1.normal_form(Y("y3*y2")) == Y("y2*y3 - 3*hbar*y1^2"));
  CHECK(c1.normal_form(Y("y1*y2*y3")) == Y("y1*y2*y3"));
  RewriteSystem c3 = from_omega("2*x1*x2*x3");
  CHECK(c3.normal_form(Y("y3*y2*y1")) == Y("y1*y2*y3").scaled(q));
  NCPoly nf = c3.normal_form(Y("y3^2*y1^3*y2"));
  CHECK(nf.is_normal());
  CHECK(nf.is_homogeneous(6));
}

TEST_CASE("commutators") {
  RewriteSystem c1 = from_omega("x1^3");
  NCPoly w2 = Y("a/2*y1 + y2"), w3 = Y("d/2*y1 + y3");
  CHECK(c1.commutator(w2, w3) == Y("3*hbar*y1^2"));
  CHECK(c1.commutator(w2, w2).is_zero());
}

TEST_CASE("PBW consistency") {
  auto r1 = pbw_consistency(from_omega("x1^3"), 6);
  CHECK(r1.ok);
  CHECK(r1.dims == std::vector<std::size_t>{1, 3, 6, 10, 15, 21, 28});
  CHECK(pbw_consistency(RewriteSystem::derive({}), 6).ok);
  CHECK(pbw_consistency(from_omega("x1^2*x3 + x1*x2^2"), 5).ok);
}

TEST_CASE("specialization") {
  RewriteSystem c3 = from_omega("2*x1*x2*x3");
  RewriteSystem s = c3.specialized({{"hbar", Scalar::rational(1, 3)}});
  CHECK(s.rule(2, 1) == Y("1/2*y1*y2"));
  CHECK_THROWS_AS(c3.specialized({{"hbar", Scalar(-1)}}), Error);
}
