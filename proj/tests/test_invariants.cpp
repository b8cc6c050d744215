#include "doctest.h"
#include "pdq/error.hpp"
#include "pdq/invariants.hpp"
#include "pdq/parser.hpp"

using namespace pdq;

namespace {

PoissonStructure ps_of(const char* omega) { return PoissonStructure::from_potential(parse_cpoly(omega)); }
RewriteSystem rs_of(const PoissonStructure& ps) { return RewriteSystem::derive(structure_constants(ps)); }
GradedMap M(const char* s) { return parse_matrix(s); }
NCPoly Y(const char* s) { return parse_ncpoly(s); }
NCPoly Z(const char* s) { return parse_ncpoly(s, 'z'); }
CPoly X(const char* s) { return parse_cpoly(s); }

LimitStructure limit(const char* b12, const char* b23, const char* b31, std::array<int, 3> deg) {
  LimitStructure s;
  s.degrees = deg;
  s.brackets[{1, 2}] = parse_cpoly(b12, 'z');
  s.brackets[{2, 3}] = parse_cpoly(b23, 'z');
  s.brackets[{3, 1}] = parse_cpoly(b31, 'z');
  return s;
}

const PoissonStructure omega4 = ps_of("x1^2*x2 + x1*x2^2");
const MatrixGroup s3 = group_closure({M("[0,-1,0; -1,0,0; 0,0,1]"), M("[-1,0,0; 1,1,0; 0,0,1]")});
const MatrixGroup z2 = group_closure({M("[-1,0,0; 0,1,0; 2,0,1]")});
const MatrixGroup trivial = group_closure({identity_map()});

GeneratorSet s3_generators() {
  return {{Y("y3"), Y("y1^2 + y2^2 + y1*y2"), Y("2*y1^3 + 3*y1^2*y2 - 3*y1*y2^2 - 2*y2^3")}, {1, 2, 3}};
}

}  // namespace

TEST_CASE("Jacobian of the quadratic and cubic invariants") {
  CPoly p = X("x1^2 + x2^2 + x1*x2"), q = X("2*x1^3 + 3*x1^2*x2 - 3*x1*x2^2 - 2*x2^3");
  CHECK(jacobian_independence(p, q, {1, 2}) == X("-27*x1^2*x2 - 27*x1*x2^2"));
  CHECK(jacobian_independence(p, p, {1, 2}).is_zero());
  CHECK(jacobian_independence(X("x1^2"), X("x2^2"), {1, 2}) == X("4*x1*x2"));
}

TEST_CASE("Reynolds operator and fixed subspaces") {
  auto r8 = rs_of(ps_of("x1^3 + x1^2*x2 + x1*x2*x3"));
  CHECK(reynolds(r8, z2, Y("y3")) == Y("y1 + y3"));
  CHECK(reynolds(r8, z2, Y("y2")) == Y("y2"));
  CHECK(reynolds(r8, z2, Y("y1")).is_zero());
  CHECK(reynolds(z2, X("x1")).is_zero());
  CHECK(fixed_subspace_basis(r8, z2, 1).size() == 2);
  CHECK(fixed_subspace_basis(r8, trivial, 1).size() == 3);

  auto r4 = rs_of(omega4);
  auto b = fixed_subspace_basis(r4, s3, 2);
  REQUIRE(b.size() == 2);
  for (const auto& v : b) CHECK(reynolds(r4, s3, v) == v);
}

TEST_CASE("degree counts") {
  CHECK(hilbert_match(s3, {1, 2, 3}, 8));
  CHECK(hilbert_match(trivial, {1, 1, 1}, 8));
  CHECK(hilbert_match(z2, {1, 1, 2}, 8));
  CHECK_FALSE(hilbert_match(s3, {1, 1, 3}, 8));
  CHECK(monomial_count({1, 2, 3}, 6) == 7);
}

TEST_CASE("S3 invariants of the fourth case") {
  auto r4 = rs_of(omega4);
  std::vector<ExpectedCommutator> expected = {
      {{1, 2}, Z("hbar*z3")}, {{2, 3}, Z("0")}, {{3, 1}, Z("-6*hbar*z2^2")}};
  auto gens = s3_generators();
  auto rep = verify_case_invariants(r4, s3, gens, expected);
  CHECK(rep.ok());

  auto lim = semiclassical_limit(rep.presentation);
  CHECK(lim.bracket(1, 2) == parse_cpoly("z3", 'z'));
  CHECK(lim.bracket(2, 3).is_zero());
  CHECK(lim.bracket(3, 1) == parse_cpoly("-6*z2^2", 'z'));
  CHECK(lim.bracket(2, 1) == parse_cpoly("-z3", 'z'));

  std::array<CPoly, 3> v{X("x3"), X("x1^2 + x2^2 + x1*x2"), X("2*x1^3 + 3*x1^2*x2 - 3*x1*x2^2 - 2*x2^3")};
  auto classical = classical_invariant_bracket(omega4, v, {1, 2, 3});
  auto rel = compare_structures(lim, classical);
  REQUIRE(rel.has_value());
  CHECK(rel->is_identity());

  auto perturbed = gens;
  perturbed.w[2] = perturbed.w[2] + Y("y3*y1^2 + y3*y2^2 + y3*y1*y2");
  auto bad = verify_case_invariants(r4, s3, perturbed, expected);
  CHECK_FALSE(bad.ok());
  for (const auto& c : bad.checks)
    if (c.name.find("invariant") != std::string::npos) CHECK(c.ok);
}

TEST_CASE("express in generators") {
  auto r4 = rs_of(omega4);
  auto gens = s3_generators();
  NCPoly w2 = gens.w[1];
  CHECK(express_in_generators(r4, gens, r4.multiply(w2, w2)) == Z("z2^2"));
  CHECK(substitute_generators(r4, gens, Z("z1*z2")) == r4.multiply(gens.w[0], w2));
  CHECK_THROWS_AS(express_in_generators(r4, gens, Y("y1")), Error);
}

TEST_CASE("first case invariants") {
  auto c1 = ps_of("x1^3");
  auto r1 = rs_of(c1);
  auto grp = group_closure({M("[-1,0,0; a,1,0; d,0,1]")});
  GeneratorSet gens{{Y("y1^2"), Y("a/2*y1 + y2"), Y("d/2*y1 + y3")}, {2, 1, 1}};
  std::vector<ExpectedCommutator> expected = {
      {{1, 2}, Z("0")}, {{2, 3}, Z("3*hbar*z1")}, {{3, 1}, Z("0")}};
  auto rep = verify_case_invariants(r1, grp, gens, expected);
  CHECK(rep.ok());
  auto lim = semiclassical_limit(rep.presentation);
  CHECK(lim.bracket(2, 3) == parse_cpoly("3*z1", 'z'));
  CHECK(lim.bracket(1, 2).is_zero());

  std::array<CPoly, 3> v{X("x1^2"), X("x2"), X("x3")};
  auto cl = classical_invariant_bracket(c1, v, {2, 1, 1});
  CHECK(cl.bracket(2, 3) == parse_cpoly("3*z1", 'z'));
}

TEST_CASE("structure comparison") {
  auto s = limit("z3", "0", "-6*z2^2", {1, 2, 3});
  auto same = compare_structures(s, s);
  REQUIRE(same.has_value());
  CHECK(same->is_identity());
  CHECK_FALSE(compare_structures(limit("z3", "0", "0", {1, 1, 1}), limit("0", "0", "0", {1, 1, 1})).has_value());
  auto scaled = compare_structures(s, limit("1/2*z3", "0", "-3*z2^2", {1, 2, 3}));
  REQUIRE(scaled.has_value());
  CHECK_FALSE(scaled->is_identity());
}

TEST_CASE("semiclassical limit needs hbar") {
  InvariantPresentation pres;
  pres.gens = {{Y("y1"), Y("y2"), Y("y3")}, {1, 1, 1}};
  pres.commutators[{1, 2}] = Z("z3");
  pres.commutators[{2, 3}] = Z("0");
  pres.commutators[{3, 1}] = Z("0");
  try {
    semiclassical_limit(pres);
    FAIL("expected NotDivisibleByHbar");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDivisibleByHbar);
  }
}
