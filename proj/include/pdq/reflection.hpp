#pragma once

// Truncated power series, trace series of graded automorphisms, reflection
// classification and Molien series.

#include <string>
#include <vector>

#include "pdq/symmetry.hpp"

namespace pdq {

struct TruncatedSeries {
  std::vector<Scalar> coeffs;  // index 0..N

  int truncation() const { return static_cast<int>(coeffs.size()) - 1; }
  std::string to_string() const;
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }
};

// 1/p(t) to order N; p[0] must be nonzero.
TruncatedSeries inverse_series(const std::vector<Scalar>& p, int n);
// 1/prod_i (1 - t^{d_i}).
TruncatedSeries product_series(const std::vector<int>& degrees, int n);
// 1/((1-t)(1+t^2))
TruncatedSeries mystic_series(int n);

TruncatedSeries trace_series(const RewriteSystem& rs, const GradedMap& m, int n);
TruncatedSeries det_series(const GradedMap& m, int n);

enum class ReflectionKind { NotReflection, Classical, Mystic };
std::string to_string(ReflectionKind k);

struct ReflectionVerdict {
  ReflectionKind kind = ReflectionKind::NotReflection;
  int order = 0;
  // det(tI - m) = t^3 - c[0] t^2 + c[1] t - c[2]
  std::array<Scalar, 3> charpoly;
};

// Throws InfiniteOrder when matrix_order finds no finite order.
ReflectionVerdict classify_reflection(const RewriteSystem& rs, const GradedMap& m, int n = 8);
// Eigenvalues (1,1,xi) with xi != 1 plus finite order; the Poisson notion.
bool is_poisson_reflection(const PoissonStructure& ps, const GradedMap& m);

TruncatedSeries molien_series(const MatrixGroup& g, int n);
// Group average of trace series.
TruncatedSeries molien_trace_series(const RewriteSystem& rs, const MatrixGroup& g, int n);
std::size_t invariant_dimension(const RewriteSystem& rs, const MatrixGroup& g, int d);

}  // namespace pdq
