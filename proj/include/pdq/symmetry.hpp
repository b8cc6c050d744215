#pragma once

// Graded maps y_i -> sum_j a[i][j] y_j, automorphism predicates and finite
// matrix groups.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdq/poisson.hpp"
#include "pdq/quantize.hpp"

namespace pdq {

using GradedMap = Matrix3;

GradedMap identity_map();
GradedMap diagonal_map(const Scalar& a, const Scalar& b, const Scalar& c);
// Matrix product. As maps, a*b applies a first and then b.
GradedMap operator*(const GradedMap& a, const GradedMap& b);
bool map_equal(const GradedMap& a, const GradedMap& b);
Scalar map_trace(const GradedMap& m);
Scalar map_det(const GradedMap& m);
// Sum of principal 2x2 minors.
Scalar map_minor_sum(const GradedMap& m);
GradedMap map_inverse(const GradedMap& m);
GradedMap map_pow(const GradedMap& m, int n);
GradedMap specialize(const GradedMap& m, const Bindings& b);
std::string to_string(const GradedMap& m);

CPoly apply_map(const GradedMap& m, const CPoly& p);
// Letters are substituted in order; the result is not normalized.
NCPoly apply_map(const GradedMap& m, const NCPoly& p);

bool is_poisson_automorphism(const GradedMap& m, const PoissonStructure& ps);
bool is_algebra_automorphism(const GradedMap& m, const RewriteSystem& rs);
// (poisson, algebra)
std::pair<bool, bool> correspondence_check(const GradedMap& m, const PoissonStructure& ps, const RewriteSystem& rs);

// Least n <= cap with m^n = I, or nullopt.
std::optional<int> matrix_order(const GradedMap& m, int cap = 1024);

struct MatrixGroup {
  std::vector<GradedMap> elements;  // identity first
  std::vector<GradedMap> generators;
  std::size_t order() const { return elements.size(); }
};

// Throws ClosureExceedsCap.
MatrixGroup group_closure(const std::vector<GradedMap>& gens, std::size_t cap = 1024);

}  // namespace pdq
