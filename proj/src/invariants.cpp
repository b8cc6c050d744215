#include "pdq/invariants.hpp"

#include <algorithm>

#include "pdq/error.hpp"

namespace pdq {

CPoly reynolds(const MatrixGroup& g, const CPoly& p) {
  CPoly acc;
  for (const auto& e : g.elements) acc += apply_map(e, p);
  return acc.scaled(Scalar(static_cast<long>(g.order())).inv());
}

NCPoly reynolds(const RewriteSystem& rs, const MatrixGroup& g, const NCPoly& p) {
  NCPoly acc;
  for (const auto& e : g.elements) acc += rs.normal_form(apply_map(e, p));
  return acc.scaled(Scalar(static_cast<long>(g.order())).inv());
}

std::vector<NCPoly> fixed_subspace_basis(const RewriteSystem& rs, const MatrixGroup& g, int d) {
  std::size_t n = basis_dim(d);
  Matrix stacked;
  for (const auto& s : g.generators) {
    Matrix a = rs.action_matrix(s, d);
    for (std::size_t i = 0; i < n; ++i) {
      a[i][i] -= Scalar(1);
      stacked.push_back(std::move(a[i]));
    }
  }
  std::vector<NCPoly> out;
  if (stacked.empty()) {
    for (const auto& w : basis(d)) out.push_back(NCPoly::word(w));
    return out;
  }
  for (const auto& v : kernel(stacked, n)) out.push_back(rs.from_vector(v, d));
  return out;
}

CPoly commutative_image(const NCPoly& p) {
  CPoly out;
  for (const auto& [w, c] : p.terms()) {
    Exp3 e{0, 0, 0};
    for (char l : w) ++e[static_cast<std::size_t>(l - '1')];
    out += CPoly::monomial(e, c);
  }
  return out;
}

namespace {

Word ordered_word(int a, int b, int c) { return Word(static_cast<std::size_t>(a), '1') + Word(static_cast<std::size_t>(b), '2') + Word(static_cast<std::size_t>(c), '3'); }

std::vector<Exp3> weighted_monomials(const std::array<int, 3>& deg, int d) {
  std::vector<Exp3> out;
  for (int a = d / deg[0]; a >= 0; --a)
    for (int b = (d - a * deg[0]) / deg[1]; b >= 0; --b) {
      int rest = d - a * deg[0] - b * deg[1];
      if (rest % deg[2] == 0) out.push_back({a, b, rest / deg[2]});
    }
  return out;
}

class PowerCache {
 public:
  PowerCache(const RewriteSystem& rs, const GeneratorSet& gens) : rs_(rs), gens_(gens) {}

  const NCPoly& power(int i, int k) {
    auto& list = pows_[static_cast<std::size_t>(i)];
    if (list.empty()) list.push_back(NCPoly(Scalar(1)));
    while (static_cast<int>(list.size()) <= k) list.push_back(rs_.multiply(list.back(), base(i)));
    return list[static_cast<std::size_t>(k)];
  }

  NCPoly ordered(const Exp3& e) {
    return rs_.multiply(rs_.multiply(power(0, e[0]), power(1, e[1])), power(2, e[2]));
  }

 private:
  const NCPoly& base(int i) {
    auto& b = bases_[static_cast<std::size_t>(i)];
    if (!b) b = rs_.normal_form(gens_.w[static_cast<std::size_t>(i)]);
    return *b;
  }

  const RewriteSystem& rs_;
  const GeneratorSet& gens_;
  std::array<std::vector<NCPoly>, 3> pows_;
  std::array<std::optional<NCPoly>, 3> bases_;
};

}  // namespace

NCPoly substitute_generators(const RewriteSystem& rs, const GeneratorSet& gens, const NCPoly& z) {
  std::array<NCPoly, 3> w;
  for (std::size_t i = 0; i < 3; ++i) w[i] = rs.normal_form(gens.w[i]);
  NCPoly out;
  for (const auto& [word, c] : z.terms()) {
    NCPoly t(c);
    for (char l : word) t = rs.multiply(t, w[static_cast<std::size_t>(l - '1')]);
    out += t;
  }
  return out;
}

NCPoly express_in_generators(const RewriteSystem& rs, const GeneratorSet& gens, const NCPoly& target) {
  NCPoly nt = rs.normal_form(target);
  if (nt.is_zero()) return nt;
  int d = nt.degree();
  if (!nt.is_homogeneous(d)) throw Error(ErrorCode::NotExpressible, "target is not homogeneous");
  PowerCache cache(rs, gens);
  std::vector<Exp3> monos = weighted_monomials(gens.degrees, d);
  std::size_t rows = basis_dim(d);
  Matrix m = zero_matrix(rows, monos.size());
  for (std::size_t k = 0; k < monos.size(); ++k) {
    Vector v = rs.to_vector(cache.ordered(monos[k]), d);
    for (std::size_t r = 0; r < rows; ++r) m[r][k] = v[r];
  }
  auto sol = solve(m, rs.to_vector(nt, d));
  if (!sol) throw Error(ErrorCode::NotExpressible, nt.to_string() + " is not in the generated subalgebra");
  NCPoly out;
  for (std::size_t k = 0; k < monos.size(); ++k)
    out += NCPoly::word(ordered_word(monos[k][0], monos[k][1], monos[k][2]), (*sol)[k]);
  return out;
}

InvariantPresentation compute_presentation(const RewriteSystem& rs, const GeneratorSet& gens) {
  InvariantPresentation p;
  p.gens = gens;
  for (auto [i, j] : kCyclicPairs) {
    NCPoly c = rs.commutator(gens.w[static_cast<std::size_t>(i - 1)], gens.w[static_cast<std::size_t>(j - 1)]);
    p.commutators[{i, j}] = express_in_generators(rs, gens, c);
  }
  return p;
}

bool InvariantReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const InvariantCheck& c) { return c.ok; });
}

namespace {

std::string pair_name(IndexPair p) {
  return "[w" + std::to_string(p.first) + ",w" + std::to_string(p.second) + "]";
}

const Bindings& hbar_zero() {
  static const Bindings b{{"hbar", Scalar(0)}};
  return b;
}

// c / hbar at hbar = 0, or nullopt when c is not divisible by hbar.
std::optional<Scalar> hbar_derivative_at_zero(const Scalar& c) {
  try {
    return specialize(c / Scalar::param("hbar"), hbar_zero());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::PoleAtSpecialization) return std::nullopt;
    throw;
  }
}

}  // namespace

InvariantReport verify_case_invariants(const RewriteSystem& rs, const MatrixGroup& g, const GeneratorSet& gens,
                                       const std::vector<ExpectedCommutator>& expected) {
  InvariantReport rep;
  for (std::size_t i = 0; i < 3; ++i) {
    NCPoly w = rs.normal_form(gens.w[i]);
    InvariantCheck c{"w" + std::to_string(i + 1) + " invariant", true, w.to_string(), "fixed by all generators"};
    for (const auto& s : g.generators) {
      NCPoly img = rs.normal_form(apply_map(s, w));
      if (img != w) {
        c.ok = false;
        c.computed = "image " + img.to_string() + " under " + to_string(s);
      }
    }
    rep.checks.push_back(std::move(c));
  }
  rep.presentation = compute_presentation(rs, gens);
  for (const auto& e : expected) {
    const NCPoly& got = rep.presentation.commutators.at(e.pair);
    InvariantCheck c{pair_name(e.pair), false, got.to_string('z'), e.value.to_string('z')};
    if (!e.leading_only) {
      c.ok = got == e.value;
    } else {
      bool only = true;
      for (const auto& [w, v] : got.terms())
        if (w != e.monomial) only = false;
      auto lead = hbar_derivative_at_zero(got.coeff(e.monomial));
      c.ok = only && lead && *lead == e.leading;
      c.expected = "hbar*(" + e.leading.to_string() + " + O(hbar))*" + NCPoly::word(e.monomial).to_string('z');
    }
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

CPoly jacobian_independence(const CPoly& p, const CPoly& q, std::pair<int, int> vars) {
  return p.derivative(vars.first) * q.derivative(vars.second) - p.derivative(vars.second) * q.derivative(vars.first);
}

bool hilbert_match(const MatrixGroup& g, const std::array<int, 3>& degrees, int n) {
  return molien_series(g, n) == product_series({degrees[0], degrees[1], degrees[2]}, n);
}

std::size_t monomial_count(const std::array<int, 3>& degrees, int d) { return weighted_monomials(degrees, d).size(); }

CPoly LimitStructure::bracket(int i, int j) const {
  if (i == j) return CPoly{};
  auto it = brackets.find({i, j});
  if (it != brackets.end()) return it->second;
  it = brackets.find({j, i});
  if (it != brackets.end()) return -it->second;
  return CPoly{};
}

std::string LimitStructure::to_string() const {
  std::string out;
  for (auto [i, j] : kCyclicPairs) {
    if (!out.empty()) out += ", ";
    out += "{z" + std::to_string(i) + ",z" + std::to_string(j) + "} = " + bracket(i, j).to_string('z');
  }
  return out;
}

LimitStructure semiclassical_limit(const InvariantPresentation& pres) {
  LimitStructure s;
  s.degrees = pres.gens.degrees;
  for (const auto& [pair, z] : pres.commutators) {
    CPoly b;
    for (const auto& [w, c] : z.terms()) {
      auto v = hbar_derivative_at_zero(c);
      if (!v) throw Error(ErrorCode::NotDivisibleByHbar, pair_name(pair) + " coefficient " + c.to_string());
      Exp3 e{0, 0, 0};
      for (char l : w) ++e[static_cast<std::size_t>(l - '1')];
      b += CPoly::monomial(e, *v);
    }
    s.brackets[pair] = b;
  }
  return s;
}

LimitStructure classical_invariant_bracket(const PoissonStructure& ps, const std::array<CPoly, 3>& v,
                                           const std::array<int, 3>& degrees) {
  LimitStructure s;
  s.degrees = degrees;
  std::array<std::vector<CPoly>, 3> pows;
  auto power = [&](std::size_t i, int k) -> const CPoly& {
    auto& list = pows[i];
    if (list.empty()) list.push_back(CPoly(Scalar(1)));
    while (static_cast<int>(list.size()) <= k) list.push_back(list.back() * v[i]);
    return list[static_cast<std::size_t>(k)];
  };
  for (auto [i, j] : kCyclicPairs) {
    CPoly b = poisson_bracket(ps, v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(j - 1)]);
    if (b.is_zero()) {
      s.brackets[{i, j}] = CPoly{};
      continue;
    }
    int d = b.degree();
    std::vector<Exp3> monos = weighted_monomials(degrees, d);
    std::vector<CPoly> prods;
    std::map<Exp3, std::size_t, Exp3Order> row_of;
    for (const auto& e : monos) {
      prods.push_back(power(0, e[0]) * power(1, e[1]) * power(2, e[2]));
      for (const auto& [x, c] : prods.back().terms()) row_of.try_emplace(x, row_of.size());
    }
    for (const auto& [x, c] : b.terms()) row_of.try_emplace(x, row_of.size());
    Matrix m = zero_matrix(row_of.size(), monos.size());
    Vector rhs(row_of.size());
    for (std::size_t k = 0; k < prods.size(); ++k)
      for (const auto& [x, c] : prods[k].terms()) m[row_of.at(x)][k] = c;
    for (const auto& [x, c] : b.terms()) rhs[row_of.at(x)] = c;
    auto sol = solve(m, rhs);
    if (!sol)
      throw Error(ErrorCode::NotExpressible, "{v" + std::to_string(i) + ",v" + std::to_string(j) + "} = " + b.to_string());
    CPoly r;
    for (std::size_t k = 0; k < monos.size(); ++k) r += CPoly::monomial(monos[k], (*sol)[k]);
    s.brackets[{i, j}] = r;
  }
  return s;
}

bool Relabeling::is_identity() const {
  return perm == std::array<int, 3>{0, 1, 2} && scale[0].is_one() && scale[1].is_one() && scale[2].is_one();
}

std::string Relabeling::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) out += ", ";
    out += "z" + std::to_string(i + 1) + " -> ";
    if (!scale[i].is_one()) out += "(" + scale[i].to_string() + ")*";
    out += "z" + std::to_string(perm[i] + 1);
  }
  return out;
}

namespace {

CPoly relabel(const CPoly& p, const Relabeling& r) {
  CPoly out;
  for (const auto& [e, c] : p.terms()) {
    Exp3 f{0, 0, 0};
    Scalar k = c;
    for (std::size_t i = 0; i < 3; ++i) {
      f[static_cast<std::size_t>(r.perm[i])] += e[i];
      if (e[i]) k *= r.scale[i].pow(e[i]);
    }
    out += CPoly::monomial(f, k);
  }
  return out;
}

bool matches(const LimitStructure& s, const LimitStructure& t, const Relabeling& r) {
  for (auto [i, j] : kCyclicPairs) {
    CPoly lhs = relabel(s.bracket(i, j), r);
    CPoly rhs = t.bracket(r.perm[static_cast<std::size_t>(i - 1)] + 1, r.perm[static_cast<std::size_t>(j - 1)] + 1)
                    .scaled(r.scale[static_cast<std::size_t>(i - 1)] * r.scale[static_cast<std::size_t>(j - 1)]);
    if (lhs != rhs) return false;
  }
  return true;
}

// Exact k-th roots (k >= 1) of a scalar that are rational, or of anything when k = 1.
std::vector<Scalar> roots(const Scalar& r, long k) {
  if (k == 1) return {r};
  auto q = r.as_rational();
  if (!q) return {};
  mpz_class num = q->get_num(), den = q->get_den();
  bool neg = num < 0;
  if (neg && k % 2 == 0) return {};
  if (neg) num = -num;
  mpz_class a, b;
  if (!mpz_root(a.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k)) ||
      !mpz_root(b.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(k)))
    return {};
  Scalar x(mpq_class(a, b));
  if (neg) return {-x};
  if (k % 2 == 0) return {x, -x};
  return {x};
}

struct ScaleEq {
  std::array<long, 3> u;
  Scalar r;  // prod c^u = r
};

// Solves the multiplicative system by integer row reduction; returns the
// candidate scalings with free unknowns set to 1.
std::vector<std::array<Scalar, 3>> solve_scalings(std::vector<ScaleEq> rows) {
  std::vector<std::pair<std::size_t, ScaleEq>> pivots;
  for (std::size_t col = 0; col < 3; ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t k = 0; k < rows.size(); ++k)
        if (rows[k].u[col] != 0 && (best == rows.size() || std::labs(rows[k].u[col]) < std::labs(rows[best].u[col])))
          best = k;
      if (best == rows.size()) break;
      bool clean = true;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        if (k == best || rows[k].u[col] == 0) continue;
        long f = rows[k].u[col] / rows[best].u[col];
        for (std::size_t c = 0; c < 3; ++c) rows[k].u[c] -= f * rows[best].u[c];
        rows[k].r = rows[k].r / rows[best].r.pow(static_cast<int>(f));
        if (rows[k].u[col] != 0) clean = false;
      }
      if (clean) {
        pivots.emplace_back(col, rows[best]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
        break;
      }
    }
  }
  for (const auto& e : rows)
    if (!e.r.is_one()) return {};
  std::vector<std::array<Scalar, 3>> sols{{Scalar(1), Scalar(1), Scalar(1)}};
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    auto [col, eq] = *it;
    std::vector<std::array<Scalar, 3>> next;
    for (const auto& s : sols) {
      Scalar rhs = eq.r;
      for (std::size_t c = col + 1; c < 3; ++c)
        if (eq.u[c]) rhs = rhs / s[c].pow(static_cast<int>(eq.u[c]));
      long k = eq.u[col];
      if (k < 0) {
        rhs = rhs.inv();
        k = -k;
      }
      for (const auto& x : roots(rhs, k)) {
        auto t = s;
        t[col] = x;
        next.push_back(t);
      }
    }
    sols = std::move(next);
  }
  return sols;
}

}  // namespace

std::optional<Relabeling> compare_structures(const LimitStructure& s, const LimitStructure& t) {
  std::array<int, 3> perm{0, 1, 2};
  do {
    bool degrees_ok = true;
    for (std::size_t i = 0; i < 3; ++i)
      if (s.degrees[i] != t.degrees[static_cast<std::size_t>(perm[i])]) degrees_ok = false;
    if (!degrees_ok) continue;
    Relabeling base;
    base.perm = perm;
    if (matches(s, t, base)) return base;
    std::vector<ScaleEq> eqs;
    bool support_ok = true;
    for (auto [i, j] : kCyclicPairs) {
      CPoly lhs = relabel(s.bracket(i, j), base);
      CPoly rhs = t.bracket(perm[static_cast<std::size_t>(i - 1)] + 1, perm[static_cast<std::size_t>(j - 1)] + 1);
      if (lhs.terms().size() != rhs.terms().size()) {
        support_ok = false;
        break;
      }
      for (const auto& [f, c] : lhs.terms()) {
        Scalar tc = rhs.coeff(f);
        if (tc.is_zero()) {
          support_ok = false;
          break;
        }
        // Exponents are over the source generators: f is the image of e.
        ScaleEq eq{{0, 0, 0}, tc / c};
        for (std::size_t k = 0; k < 3; ++k) eq.u[k] = f[static_cast<std::size_t>(perm[k])];
        eq.u[static_cast<std::size_t>(i - 1)] -= 1;
        eq.u[static_cast<std::size_t>(j - 1)] -= 1;
        eqs.push_back(eq);
      }
      if (!support_ok) break;
    }
    if (!support_ok) continue;
    for (const auto& sc : solve_scalings(eqs)) {
      Relabeling r = base;
      r.scale = sc;
      if (matches(s, t, r)) return r;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace pdq
