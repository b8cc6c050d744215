#include "pdq/symmetry.hpp"

#include "pdq/error.hpp"

namespace pdq {

GradedMap identity_map() { return diagonal_map(Scalar(1), Scalar(1), Scalar(1)); }

GradedMap diagonal_map(const Scalar& a, const Scalar& b, const Scalar& c) {
  GradedMap m{};
  m[0][0] = a;
  m[1][1] = b;
  m[2][2] = c;
  return m;
}

GradedMap operator*(const GradedMap& a, const GradedMap& b) {
  GradedMap r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < 3; ++j)
        if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

bool map_equal(const GradedMap& a, const GradedMap& b) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (a[i][j] != b[i][j]) return false;
  return true;
}

Scalar map_trace(const GradedMap& m) { return m[0][0] + m[1][1] + m[2][2]; }

Scalar map_det(const GradedMap& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Scalar map_minor_sum(const GradedMap& m) {
  return (m[0][0] * m[1][1] - m[0][1] * m[1][0]) + (m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
         (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
}

GradedMap map_inverse(const GradedMap& m) {
  Scalar det = map_det(m);
  if (det.is_zero()) throw Error(ErrorCode::DivisionByZero, "singular map");
  Scalar inv = det.inv();
  GradedMap r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) * inv;
    }
  return r;
}

GradedMap map_pow(const GradedMap& m, int n) {
  if (n < 0) return map_pow(map_inverse(m), -n);
  GradedMap r = identity_map(), base = m;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

GradedMap specialize(const GradedMap& m, const Bindings& b) {
  GradedMap r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r[i][j] = specialize(m[i][j], b);
  return r;
}

std::string to_string(const GradedMap& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < 3; ++j) {
      if (j) out += ", ";
      out += m[i][j].to_string();
    }
  }
  return out + "]";
}

CPoly apply_map(const GradedMap& m, const CPoly& p) {
  std::array<CPoly, 3> img;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      img[i] += CPoly::variable(static_cast<int>(j + 1)).scaled(m[i][j]);
  CPoly out;
  for (const auto& [e, c] : p.terms()) {
    CPoly t(c);
    for (std::size_t i = 0; i < 3; ++i)
      for (int k = 0; k < e[i]; ++k) t = t * img[i];
    out += t;
  }
  return out;
}

NCPoly apply_map(const GradedMap& m, const NCPoly& p) {
  std::array<NCPoly, 3> img;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) img[i] += NCPoly::variable(static_cast<int>(j + 1)).scaled(m[i][j]);
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    NCPoly t(c);
    for (char letter : w) t = t * img[static_cast<std::size_t>(letter - '1')];
    out += t;
  }
  return out;
}

bool is_poisson_automorphism(const GradedMap& m, const PoissonStructure& ps) {
  if (map_det(m).is_zero()) return false;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      CPoly lhs = apply_map(m, ps.bracket(i, j));
      CPoly rhs = poisson_bracket(ps, apply_map(m, CPoly::variable(i)), apply_map(m, CPoly::variable(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

bool is_algebra_automorphism(const GradedMap& m, const RewriteSystem& rs) {
  if (map_det(m).is_zero()) return false;
  for (auto [j, i] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}}) {
    NCPoly rel = NCPoly::variable(j) * NCPoly::variable(i) - rs.rule(j, i);
    if (!rs.normal_form(apply_map(m, rel)).is_zero()) return false;
  }
  return true;
}

std::pair<bool, bool> correspondence_check(const GradedMap& m, const PoissonStructure& ps, const RewriteSystem& rs) {
  return {is_poisson_automorphism(m, ps), is_algebra_automorphism(m, rs)};
}

std::optional<int> matrix_order(const GradedMap& m, int cap) {
  GradedMap id = identity_map(), p = m;
  for (int n = 1; n <= cap; ++n) {
    if (map_equal(p, id)) return n;
    p = p * m;
  }
  return std::nullopt;
}

MatrixGroup group_closure(const std::vector<GradedMap>& gens, std::size_t cap) {
  MatrixGroup g;
  g.generators = gens;
  g.elements.push_back(identity_map());
  auto contains = [&](const GradedMap& x) {
    for (const auto& e : g.elements)
      if (map_equal(e, x)) return true;
    return false;
  };
  // Breadth-first over right multiplication by generators; finite groups
  // are closed under inverses automatically.
  for (std::size_t k = 0; k < g.elements.size(); ++k) {
    for (const auto& s : gens) {
      GradedMap x = g.elements[k] * s;
      if (contains(x)) continue;
      if (g.elements.size() >= cap)
        throw Error(ErrorCode::ClosureExceedsCap, "group exceeds " + std::to_string(cap) + " elements");
      g.elements.push_back(std::move(x));
    }
  }
  return g;
}

}  // namespace pdq
