#include "doctest.h"
#include "pdq/error.hpp"
#include "pdq/parser.hpp"
#include "pdq/reflection.hpp"

using namespace pdq;

namespace {

PoissonStructure ps_of(const char* omega) { return PoissonStructure::from_potential(parse_cpoly(omega)); }
RewriteSystem rs_of(const char* omega) { return RewriteSystem::derive(structure_constants(ps_of(omega))); }
GradedMap M(const char* s) { return parse_matrix(s); }

std::vector<Scalar> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

TruncatedSeries series(std::initializer_list<long> v) { return {ints(v)}; }

const GradedMap cyclic = parse_matrix("[0,1,0; 0,0,1; 1,0,0]");

}  // namespace

TEST_CASE("series arithmetic") {
  CHECK(inverse_series(ints({1, -1}), 4) == series({1, 1, 1, 1, 1}));
  CHECK(product_series({1, 2, 3}, 8) == series({1, 1, 2, 3, 4, 5, 7, 8, 10}));
  CHECK(product_series({1, 1, 2}, 5) == series({1, 2, 4, 6, 9, 12}));
  CHECK(mystic_series(4) == series({1, 1, 0, 0, 1}));
  CHECK(det_series(identity_map(), 3) == series({1, 3, 6, 10}));
  CHECK(det_series(diagonal_map(-1, 1, 1), 5) == series({1, 1, 2, 2, 3, 3}));
  CHECK(det_series(cyclic, 6) == series({1, 0, 0, 1, 0, 0, 1}));
}

TEST_CASE("trace series") {
  CHECK(trace_series(rs_of("x1^3"), identity_map(), 3) == series({1, 3, 6, 10}));
  CHECK(trace_series(rs_of("x1^3"), diagonal_map(-1, 1, 1), 5) == series({1, 1, 2, 2, 3, 3}));
  CHECK(trace_series(rs_of("2*x1*x2*x3"), cyclic, 6) == series({1, 0, 0, 1, 0, 0, 1}));
  GradedMap fam = M("[a,0,0; 0,b,0; c,d,a]");
  auto r2 = rs_of("x1^2*x2");
  CHECK(trace_series(r2, fam, 5) == det_series(fam, 5));
}

TEST_CASE("reflection classification") {
  auto r2 = rs_of("x1^2*x2");
  auto v = classify_reflection(r2, diagonal_map(1, -1, 1));
  CHECK(v.kind == ReflectionKind::Classical);
  CHECK(v.order == 2);
  CHECK(classify_reflection(r2, identity_map()).kind == ReflectionKind::NotReflection);
  CHECK(is_poisson_reflection(ps_of("x1^2*x2"), diagonal_map(1, -1, 1)));
  CHECK_FALSE(is_poisson_reflection(ps_of("x1^2*x2"), identity_map()));

  Scalar r = Scalar::sqrt3();
  GradedMap m = {{{Scalar::rational(-1, 2), r / Scalar(2), Scalar(0)},
                  {-r / Scalar(2), Scalar::rational(-1, 2), Scalar(0)},
                  {Scalar::rational(9, 8), Scalar(-3) * r / Scalar(8), Scalar(1)}}};
  auto r6 = rs_of("x1^3 + x1^2*x3 + x2^2*x3");
  CHECK(classify_reflection(r6, m).kind == ReflectionKind::NotReflection);

  try {
    classify_reflection(r2, M("[1,0,0; 0,1,0; 1,0,1]"));
    FAIL("expected InfiniteOrder");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InfiniteOrder);
  }
}

TEST_CASE("Molien series") {
  auto s3 = group_closure({M("[0,-1,0; -1,0,0; 0,0,1]"), M("[-1,0,0; 1,1,0; 0,0,1]")});
  CHECK(molien_series(s3, 8) == series({1, 1, 2, 3, 4, 5, 7, 8, 10}));
  auto trivial = group_closure({identity_map()});
  CHECK(molien_series(trivial, 3) == series({1, 3, 6, 10}));
  auto z2 = group_closure({M("[-1,0,0; 0,1,0; 2,0,1]")});
  CHECK(molien_series(z2, 5) == series({1, 2, 4, 6, 9, 12}));

  auto r8 = rs_of("x1^3 + x1^2*x2 + x1*x2*x3");
  CHECK(molien_trace_series(r8, z2, 5) == molien_series(z2, 5));
  CHECK(invariant_dimension(r8, z2, 1) == 2);
  CHECK(invariant_dimension(r8, trivial, 2) == 6);
  auto r4 = rs_of("x1^2*x2 + x1*x2^2");
  CHECK(invariant_dimension(r4, s3, 2) == 2);
  CHECK(invariant_dimension(r4, s3, 4) == 4);
}
