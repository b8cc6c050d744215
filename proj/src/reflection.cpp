#include "pdq/reflection.hpp"

#include "pdq/error.hpp"

namespace pdq {

std::string TruncatedSeries::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ", ";
    out += coeffs[i].to_string();
  }
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.coeffs.size() != b.coeffs.size()) return false;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    if (a.coeffs[i] != b.coeffs[i]) return false;
  return true;
}

TruncatedSeries inverse_series(const std::vector<Scalar>& p, int n) {
  if (p.empty() || p[0].is_zero()) throw Error(ErrorCode::DivisionByZero, "series constant term is zero");
  Scalar inv0 = p[0].inv();
  TruncatedSeries s;
  s.coeffs.resize(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    Scalar acc = k == 0 ? Scalar(1) : Scalar{};
    for (int j = 1; j <= k && j < static_cast<int>(p.size()); ++j)
      acc -= p[static_cast<std::size_t>(j)] * s.coeffs[static_cast<std::size_t>(k - j)];
    s.coeffs[static_cast<std::size_t>(k)] = acc * inv0;
  }
  return s;
}

TruncatedSeries product_series(const std::vector<int>& degrees, int n) {
  std::vector<Scalar> p{Scalar(1)};
  for (int d : degrees) {
    std::vector<Scalar> q(p.size() + static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] += p[i];
      q[i + static_cast<std::size_t>(d)] -= p[i];
    }
    p = std::move(q);
  }
  return inverse_series(p, n);
}

TruncatedSeries mystic_series(int n) {
  return inverse_series({Scalar(1), Scalar(-1), Scalar(1), Scalar(-1)}, n);
}

TruncatedSeries trace_series(const RewriteSystem& rs, const GradedMap& m, int n) {
  return {rs.action_traces(m, n)};
}

TruncatedSeries det_series(const GradedMap& m, int n) {
  // det(I - t m) = 1 - tr t + e2 t^2 - det t^3
  return inverse_series({Scalar(1), -map_trace(m), map_minor_sum(m), -map_det(m)}, n);
}

std::string to_string(ReflectionKind k) {
  switch (k) {
    case ReflectionKind::NotReflection: return "none";
    case ReflectionKind::Classical: return "classical";
    case ReflectionKind::Mystic: return "mystic";
  }
  return "?";
}

namespace {

bool eigen_one_one_xi(const std::array<Scalar, 3>& c) {
  const Scalar& xi = c[2];
  return xi != Scalar(1) && c[0] == Scalar(2) + xi && c[1] == Scalar(1) + Scalar(2) * xi;
}

}  // namespace

ReflectionVerdict classify_reflection(const RewriteSystem& rs, const GradedMap& m, int n) {
  ReflectionVerdict v;
  v.charpoly = {map_trace(m), map_minor_sum(m), map_det(m)};
  auto ord = matrix_order(m);
  if (!ord) throw Error(ErrorCode::InfiniteOrder, to_string(m));
  v.order = *ord;
  if (eigen_one_one_xi(v.charpoly)) {
    v.kind = ReflectionKind::Classical;
  } else if (trace_series(rs, m, n) == mystic_series(n)) {
    v.kind = ReflectionKind::Mystic;
  }
  return v;
}

bool is_poisson_reflection(const PoissonStructure& ps, const GradedMap& m) {
  if (!is_poisson_automorphism(m, ps) || !matrix_order(m)) return false;
  return eigen_one_one_xi({map_trace(m), map_minor_sum(m), map_det(m)});
}

TruncatedSeries molien_series(const MatrixGroup& g, int n) {
  TruncatedSeries s;
  s.coeffs.assign(static_cast<std::size_t>(n + 1), Scalar{});
  for (const auto& e : g.elements) {
    TruncatedSeries t = det_series(e, n);
    for (int k = 0; k <= n; ++k) s.coeffs[static_cast<std::size_t>(k)] += t.coeffs[static_cast<std::size_t>(k)];
  }
  Scalar inv = Scalar(static_cast<long>(g.order())).inv();
  for (auto& c : s.coeffs) c *= inv;
  return s;
}

TruncatedSeries molien_trace_series(const RewriteSystem& rs, const MatrixGroup& g, int n) {
  TruncatedSeries s;
  s.coeffs.assign(static_cast<std::size_t>(n + 1), Scalar{});
  for (const auto& e : g.elements) {
    TruncatedSeries t = trace_series(rs, e, n);
    for (int k = 0; k <= n; ++k) s.coeffs[static_cast<std::size_t>(k)] += t.coeffs[static_cast<std::size_t>(k)];
  }
  Scalar inv = Scalar(static_cast<long>(g.order())).inv();
  for (auto& c : s.coeffs) c *= inv;
  return s;
}

std::size_t invariant_dimension(const RewriteSystem& rs, const MatrixGroup& g, int d) {
  std::size_t n = basis_dim(d);
  Matrix stacked;
  for (const auto& s : g.generators) {
    Matrix a = rs.action_matrix(s, d);
    for (std::size_t i = 0; i < n; ++i) {
      a[i][i] -= Scalar(1);
      stacked.push_back(std::move(a[i]));
    }
  }
  if (stacked.empty()) return n;
  return n - rank(stacked);
}

}  // namespace pdq
