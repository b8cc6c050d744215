#include "pdq/poisson.hpp"

#include "pdq/error.hpp"

namespace pdq {

CPoly::CPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Exp3{0, 0, 0}, c);
}

CPoly CPoly::variable(int i) {
  Exp3 e{0, 0, 0};
  e.at(static_cast<std::size_t>(i - 1)) = 1;
  return monomial(e, Scalar(1));
}

CPoly CPoly::monomial(const Exp3& e, const Scalar& c) {
  CPoly p;
  if (!c.is_zero()) p.terms_.emplace(e, c);
  return p;
}

Scalar CPoly::coeff(const Exp3& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar{} : it->second;
}

int CPoly::degree(const Exp3& w) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] * w[0] + e[1] * w[1] + e[2] * w[2]);
  return d;
}

bool CPoly::is_homogeneous(int d, const Exp3& w) const {
  for (const auto& [e, c] : terms_)
    if (e[0] * w[0] + e[1] * w[1] + e[2] * w[2] != d) return false;
  return true;
}

std::optional<Scalar> CPoly::as_constant() const {
  if (terms_.empty()) return Scalar{};
  if (terms_.size() == 1 && terms_.begin()->first == Exp3{0, 0, 0}) return terms_.begin()->second;
  return std::nullopt;
}

CPoly CPoly::operator-() const {
  CPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

CPoly& CPoly::operator+=(const CPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

CPoly operator+(const CPoly& a, const CPoly& b) {
  CPoly r = a;
  r += b;
  return r;
}

CPoly operator-(const CPoly& a, const CPoly& b) { return a + (-b); }

CPoly operator*(const CPoly& a, const CPoly& b) {
  CPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exp3 e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      r += CPoly::monomial(e, ca * cb);
    }
  return r;
}

CPoly CPoly::scaled(const Scalar& c) const {
  if (c.is_zero()) return CPoly{};
  CPoly r = *this;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

CPoly CPoly::pow(int n) const {
  CPoly r(Scalar(1));
  for (int k = 0; k < n; ++k) r = r * *this;
  return r;
}

CPoly CPoly::derivative(int i) const {
  std::size_t k = static_cast<std::size_t>(i - 1);
  CPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exp3 f = e;
    --f[k];
    r += monomial(f, c * Scalar(e[k]));
  }
  return r;
}

bool operator==(const CPoly& a, const CPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return (a - b).is_zero();
  auto it = b.terms_.begin();
  for (const auto& [e, c] : a.terms_) {
    if (it->first != e || it->second != c) return (a - b).is_zero();
    ++it;
  }
  return true;
}

std::string CPoly::to_string(char var) const {
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (int i = 0; i < 3; ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += var + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    append_term(out, c, mono);
  }
  return out.empty() ? "0" : out;
}

PoissonStructure::PoissonStructure(CPoly b12, CPoly b23, CPoly b31)
    : b12_(std::move(b12)), b23_(std::move(b23)), b31_(std::move(b31)) {}

PoissonStructure PoissonStructure::from_potential(const CPoly& omega) {
  if (!omega.is_homogeneous(3)) throw Error(ErrorCode::NotHomogeneousDegree3, "superpotential " + omega.to_string());
  return PoissonStructure(omega.derivative(3), omega.derivative(1), omega.derivative(2));
}

PoissonStructure PoissonStructure::from_constants(const StructureConstants& c) {
  std::array<CPoly, 3> b;  // 12, 13, 23
  for (const auto& [ij, row] : c) {
    CPoly p;
    for (const auto& [kl, v] : row) {
      Exp3 e{0, 0, 0};
      ++e.at(static_cast<std::size_t>(kl.first - 1));
      ++e.at(static_cast<std::size_t>(kl.second - 1));
      p += CPoly::monomial(e, v);
    }
    if (ij == IndexPair{1, 2}) b[0] = p;
    else if (ij == IndexPair{1, 3}) b[1] = p;
    else if (ij == IndexPair{2, 3}) b[2] = p;
    else throw Error(ErrorCode::SchemaError, "bracket index must be (1,2), (1,3) or (2,3)");
  }
  return PoissonStructure(b[0], b[2], -b[1]);
}

CPoly PoissonStructure::bracket(int i, int j) const {
  if (i == j) return CPoly{};
  if (i == 1 && j == 2) return b12_;
  if (i == 2 && j == 3) return b23_;
  if (i == 3 && j == 1) return b31_;
  return -bracket(j, i);
}

CPoly poisson_bracket(const PoissonStructure& ps, const CPoly& f, const CPoly& g) {
  std::array<CPoly, 3> df{f.derivative(1), f.derivative(2), f.derivative(3)};
  std::array<CPoly, 3> dg{g.derivative(1), g.derivative(2), g.derivative(3)};
  CPoly r;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      CPoly w = df[i - 1] * dg[j - 1] - df[j - 1] * dg[i - 1];
      if (!w.is_zero()) r += ps.bracket(i, j) * w;
    }
  return r;
}

bool jacobi_check(const PoissonStructure& ps) {
  CPoly x1 = CPoly::variable(1), x2 = CPoly::variable(2), x3 = CPoly::variable(3);
  CPoly s = poisson_bracket(ps, x1, ps.bracket(2, 3)) + poisson_bracket(ps, x2, ps.bracket(3, 1)) +
            poisson_bracket(ps, x3, ps.bracket(1, 2));
  return s.is_zero();
}

StructureConstants structure_constants(const PoissonStructure& ps) {
  StructureConstants out;
  for (auto [i, j] : {IndexPair{1, 2}, IndexPair{1, 3}, IndexPair{2, 3}}) {
    CPoly b = ps.bracket(i, j);
    if (!b.is_homogeneous(2)) throw Error(ErrorCode::NotQuadratic, "bracket {x" + std::to_string(i) + ",x" + std::to_string(j) + "}");
    for (const auto& [e, c] : b.terms()) {
      int k = 0, l = 0;
      std::vector<int> idx;
      for (int v = 0; v < 3; ++v)
        for (int t = 0; t < e[v]; ++t) idx.push_back(v + 1);
      k = idx[0];
      l = idx[1];
      out[{i, j}][{k, l}] = c;
    }
  }
  return out;
}

}  // namespace pdq
