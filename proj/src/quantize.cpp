#include "pdq/quantize.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <random>

#include "pdq/error.hpp"

namespace pdq {

bool is_normal_word(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] < w[i - 1]) return false;
  return true;
}

// ---------------------------------------------------------------- NCPoly

NCPoly::NCPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Word{}, c);
}

NCPoly NCPoly::variable(int i) { return word(Word(1, static_cast<char>('0' + i))); }

NCPoly NCPoly::word(const Word& w, const Scalar& c) {
  NCPoly p;
  if (!c.is_zero()) p.terms_.emplace(w, c);
  return p;
}

bool NCPoly::is_normal() const {
  for (const auto& [w, c] : terms_)
    if (!is_normal_word(w)) return false;
  return true;
}

int NCPoly::degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size()); }

bool NCPoly::is_homogeneous(int d) const {
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) != d) return false;
  return true;
}

Scalar NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar{} : it->second;
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

NCPoly operator+(const NCPoly& a, const NCPoly& b) {
  NCPoly r = a;
  r += b;
  return r;
}

NCPoly operator-(const NCPoly& a, const NCPoly& b) { return a + (-b); }

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r += NCPoly::word(wa + wb, ca * cb);
  return r;
}

NCPoly NCPoly::scaled(const Scalar& c) const {
  if (c.is_zero()) return NCPoly{};
  NCPoly r = *this;
  for (auto& [w, v] : r.terms_) v *= c;
  return r;
}

NCPoly NCPoly::pow(int n) const {
  NCPoly r(Scalar(1));
  for (int k = 0; k < n; ++k) r = r * *this;
  return r;
}

bool operator==(const NCPoly& a, const NCPoly& b) { return (a - b).is_zero(); }

std::string NCPoly::to_string(char var) const {
  std::string out;
  for (const auto& [w, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (!mono.empty()) mono += "*";
      mono += var;
      mono += w[i];
      if (j - i > 1) mono += "^" + std::to_string(j - i);
      i = j;
    }
    append_term(out, c, mono);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- basis

std::size_t basis_dim(int d) { return d < 0 ? 0 : static_cast<std::size_t>((d + 1) * (d + 2) / 2); }

std::vector<Word> basis(int d) {
  std::vector<Word> out;
  for (int i = d; i >= 0; --i)
    for (int j = d - i; j >= 0; --j)
      out.push_back(Word(static_cast<std::size_t>(i), '1') + Word(static_cast<std::size_t>(j), '2') +
                    Word(static_cast<std::size_t>(d - i - j), '3'));
  return out;
}

std::size_t basis_index(const Word& w) {
  std::size_t i = 0, j = 0;
  for (char ch : w) {
    if (ch == '1') ++i;
    else if (ch == '2') ++j;
  }
  std::size_t r = w.size() - i;
  return r * (r + 1) / 2 + r - j;
}

namespace {
std::atomic<int> g_cap_override{0};
}

int default_degree_cap() {
  int o = g_cap_override.load();
  if (o > 0) return o;
  if (const char* env = std::getenv("PDQ_MAXDEG")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 8;
}

void set_default_degree_cap(int cap) { g_cap_override.store(cap); }

// ---------------------------------------------------------------- RewriteSystem

struct RewriteSystem::Level {
  // ops[g-1][v]: y_g times basis word v, in the next degree.
  std::array<std::vector<Vector>, 3> ops;
};

struct RewriteSystem::Cache {
  std::mutex mu;
  std::vector<std::unique_ptr<Level>> levels;
  std::mutex trace_mu;
  std::map<std::string, std::vector<Scalar>> traces;
};

namespace {

int head(const Word& w) { return w[0] - '0'; }

Word with_head(int g, const Word& w) { return Word(1, static_cast<char>('0' + g)) + w; }

void check_rule(const NCPoly& r) {
  if (!r.is_normal() || !r.is_homogeneous(2))
    throw Error(ErrorCode::SchemaError, "rule right side must be normal and quadratic: " + r.to_string());
}

void axpy(Vector& y, const Scalar& a, const Vector& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

// sum_k c_k v_k with every entry put over one denominator and normalized
// once. The vectors must outlive the combination.
class Combination {
 public:
  void add(const Scalar& c, const Vector& v) {
    if (!c.is_zero()) terms_.emplace_back(c, &v);
  }
  Vector result(std::size_t n) const {
    Vector out(n);
    std::vector<Scalar> parts;
    for (std::size_t i = 0; i < n; ++i) {
      parts.clear();
      for (const auto& [c, v] : terms_)
        if (i < v->size() && !(*v)[i].is_zero()) parts.push_back(c.is_one() ? (*v)[i] : c * (*v)[i]);
      out[i] = parts.size() == 1 ? parts[0] : sum_of(parts);
    }
    return out;
  }

 private:
  std::vector<std::pair<Scalar, const Vector*>> terms_;
};

}  // namespace

RewriteSystem::RewriteSystem(NCPoly r21, NCPoly r31, NCPoly r32, int degree_cap)
    : rules_{std::move(r21), std::move(r31), std::move(r32)}, cap_(degree_cap), cache_(std::make_shared<Cache>()) {
  for (const auto& r : rules_) check_rule(r);
}

const NCPoly& RewriteSystem::rule(int j, int i) const {
  if (j == 2 && i == 1) return rules_[0];
  if (j == 3 && i == 1) return rules_[1];
  if (j == 3 && i == 2) return rules_[2];
  throw Error(ErrorCode::SchemaError, "no rule for descent pair");
}

RewriteSystem RewriteSystem::derive(const StructureConstants& c) {
  Scalar hbar = Scalar::param("hbar");
  Scalar half_hbar = hbar / Scalar(2);
  // Unknowns u21, u31, u32 in that order; ordered words in basis(2) order.
  const std::array<IndexPair, 3> pairs{IndexPair{1, 2}, IndexPair{1, 3}, IndexPair{2, 3}};
  auto unknown_of = [](int k, int l) { return (k == 2 && l == 1) ? 0 : (k == 3 && l == 1) ? 1 : 2; };
  std::vector<Word> ordered = basis(2);
  Matrix aug = zero_matrix(3, 3 + ordered.size());
  for (std::size_t r = 0; r < 3; ++r) {
    auto [i, j] = pairs[r];
    // y_j y_i + (h/2) sum_{k<l} c u_lk = y_i y_j - h sum_k c_kk y_k^2 - (h/2) sum_{k<l} c y_k y_l
    aug[r][static_cast<std::size_t>(unknown_of(j, i))] += Scalar(1);
    aug[r][3 + basis_index(Word{char('0' + i), char('0' + j)})] += Scalar(1);
    auto it = c.find(pairs[r]);
    if (it == c.end()) continue;
    for (const auto& [kl, v] : it->second) {
      auto [k, l] = kl;
      Word kk{char('0' + k), char('0' + l)};
      if (k == l) {
        aug[r][3 + basis_index(kk)] -= hbar * v;
      } else {
        aug[r][static_cast<std::size_t>(unknown_of(l, k))] += half_hbar * v;
        aug[r][3 + basis_index(kk)] -= half_hbar * v;
      }
    }
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < 3 || e.pivots[2] != 2)
    throw Error(ErrorCode::SingularRelationSystem, "relation system has no unique solution");
  std::array<NCPoly, 3> rules;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t k = 0; k < ordered.size(); ++k) rules[r] += NCPoly::word(ordered[k], e.rows[r][3 + k]);
  return RewriteSystem(rules[0], rules[1], rules[2]);
}

RewriteSystem RewriteSystem::specialized(const Bindings& b) const {
  auto f = [&](const Scalar& s) { return specialize(s, b); };
  return RewriteSystem(rules_[0].map_coeffs(f), rules_[1].map_coeffs(f), rules_[2].map_coeffs(f), cap_);
}

RewriteSystem RewriteSystem::with_degree_cap(int cap) const {
  RewriteSystem r(rules_[0], rules_[1], rules_[2], cap);
  return r;
}

const RewriteSystem::Level& RewriteSystem::level(int d) const {
  if (d + 1 > cap_)
    throw Error(ErrorCode::DegreeCapExceeded,
                "degree " + std::to_string(d + 1) + " exceeds cap " + std::to_string(cap_));
  std::lock_guard lock(cache_->mu);
  auto& levels = cache_->levels;
  while (static_cast<int>(levels.size()) <= d) {
    int deg = static_cast<int>(levels.size());
    std::vector<Word> words = basis(deg);
    std::size_t n = words.size(), next = basis_dim(deg + 1);
    auto lvl = std::make_unique<Level>();
    for (auto& v : lvl->ops) v.assign(n, Vector{});

    // Unknowns are y_g * V with g > head(V).
    std::map<std::pair<int, std::size_t>, std::size_t> unknown_id;
    std::vector<std::pair<int, std::size_t>> unknowns;
    for (std::size_t v = 0; v < n; ++v)
      for (int g = 1; g <= 3; ++g) {
        if (deg == 0 || g <= head(words[v])) {
          Vector e(next);
          e[basis_index(with_head(g, words[v]))] = Scalar(1);
          lvl->ops[g - 1][v] = std::move(e);
        } else {
          unknown_id[{g, v}] = unknowns.size();
          unknowns.emplace_back(g, v);
        }
      }

    std::size_t m = unknowns.size();
    std::vector<Vector> known(m, Vector(next));
    std::vector<std::map<std::size_t, Scalar>> deps(m);
    for (std::size_t u = 0; u < m; ++u) {
      auto [g, v] = unknowns[u];
      const Word& V = words[v];
      int h = head(V);
      Word tail = V.substr(1);
      const Level& prev = *levels[static_cast<std::size_t>(deg - 1)];
      std::size_t ti = basis_index(tail);
      for (const auto& [ab, c] : rule(g, h).terms()) {
        int a = ab[0] - '0', b = ab[1] - '0';
        const Vector& w = prev.ops[b - 1][ti];
        for (std::size_t ui = 0; ui < w.size(); ++ui) {
          if (w[ui].is_zero()) continue;
          Scalar coef = c * w[ui];
          const Word& U = words[ui];
          if (a <= head(U)) {
            known[u][basis_index(with_head(a, U))] += coef;
          } else {
            Scalar& slot = deps[u][unknown_id.at({a, ui})];
            slot += coef;
          }
        }
      }
      for (auto it = deps[u].begin(); it != deps[u].end();)
        it = it->second.is_zero() ? deps[u].erase(it) : std::next(it);
    }

    // Tarjan SCCs; each SCC is emitted after everything it depends on.
    std::vector<int> index(m, -1), low(m, 0);
    std::vector<bool> on_stack(m, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> sccs;
    int counter = 0;
    std::function<void(std::size_t)> strong = [&](std::size_t x) {
      index[x] = low[x] = counter++;
      stack.push_back(x);
      on_stack[x] = true;
      for (const auto& [y, c] : deps[x]) {
        if (index[y] < 0) {
          strong(y);
          low[x] = std::min(low[x], low[y]);
        } else if (on_stack[y]) {
          low[x] = std::min(low[x], index[y]);
        }
      }
      if (low[x] == index[x]) {
        std::vector<std::size_t> comp;
        std::size_t y;
        do {
          y = stack.back();
          stack.pop_back();
          on_stack[y] = false;
          comp.push_back(y);
        } while (y != x);
        std::sort(comp.begin(), comp.end());
        sccs.push_back(std::move(comp));
      }
    };
    for (std::size_t x = 0; x < m; ++x)
      if (index[x] < 0) strong(x);

    std::vector<Vector> solved(m);
    for (const auto& comp : sccs) {
      std::map<std::size_t, std::size_t> local;
      for (std::size_t k = 0; k < comp.size(); ++k) local[comp[k]] = k;
      bool self = comp.size() == 1 && deps[comp[0]].count(comp[0]);
      if (comp.size() == 1 && !self) {
        std::size_t x = comp[0];
        Combination r;
        r.add(Scalar(1), known[x]);
        for (const auto& [y, c] : deps[x]) r.add(c, solved[y]);
        solved[x] = r.result(next);
        continue;
      }
      // Invert the small coefficient block first so each right-hand side
      // entry, which can be large, is combined only once.
      std::size_t k = comp.size();
      Matrix aug = zero_matrix(k, 2 * k);
      std::vector<Vector> rhs(k);
      for (std::size_t row = 0; row < k; ++row) {
        std::size_t x = comp[row];
        aug[row][row] += Scalar(1);
        aug[row][k + row] = Scalar(1);
        Combination r;
        r.add(Scalar(1), known[x]);
        for (const auto& [y, c] : deps[x]) {
          auto it = local.find(y);
          if (it != local.end()) {
            aug[row][it->second] -= c;
          } else {
            r.add(c, solved[y]);
          }
        }
        rhs[row] = r.result(next);
      }
      Echelon e = rref(std::move(aug));
      if (e.pivots.size() < k || e.pivots[k - 1] != k - 1) {
        auto [g, v] = unknowns[comp[0]];
        throw Error(ErrorCode::SingularDegreeSystem,
                    "degree " + std::to_string(deg + 1) + " system singular at y" + std::to_string(g) + "*" +
                        NCPoly::word(words[v]).to_string());
      }
      for (std::size_t row = 0; row < k; ++row) {
        Combination r;
        for (std::size_t j = 0; j < k; ++j) r.add(e.rows[row][k + j], rhs[j]);
        solved[comp[row]] = r.result(next);
      }
    }
    for (std::size_t u = 0; u < m; ++u) lvl->ops[unknowns[u].first - 1][unknowns[u].second] = std::move(solved[u]);
    levels.push_back(std::move(lvl));
  }
  return *levels[static_cast<std::size_t>(d)];
}

const Vector& RewriteSystem::left_mult(int g, int d, std::size_t v) const {
  return level(d).ops[static_cast<std::size_t>(g - 1)][v];
}

Vector RewriteSystem::left_mult(int g, int d, const Vector& x) const {
  const auto& ops = level(d).ops[static_cast<std::size_t>(g - 1)];
  Combination out;
  for (std::size_t v = 0; v < x.size(); ++v) out.add(x[v], ops[v]);
  return out.result(basis_dim(d + 1));
}

Vector RewriteSystem::to_vector(const NCPoly& p, int d) const {
  Vector v(basis_dim(d));
  for (const auto& [w, c] : p.terms()) {
    if (static_cast<int>(w.size()) != d || !is_normal_word(w))
      throw Error(ErrorCode::SchemaError, "to_vector expects a normal homogeneous polynomial");
    v[basis_index(w)] = c;
  }
  return v;
}

NCPoly RewriteSystem::from_vector(const Vector& v, int d) const {
  std::vector<Word> words = basis(d);
  NCPoly p;
  for (std::size_t i = 0; i < v.size(); ++i) p += NCPoly::word(words[i], v[i]);
  return p;
}

Vector RewriteSystem::nf_homogeneous(const std::vector<std::pair<Word, Scalar>>& terms, std::size_t offset,
                                     int d) const {
  // All terms share their first `offset` letters and have length d.
  int rest = d - static_cast<int>(offset);
  if (rest == 0) {
    Scalar s;
    for (const auto& t : terms) s += t.second;
    return Vector{s};
  }
  Vector out(basis_dim(rest));
  std::size_t lo = 0;
  while (lo < terms.size()) {
    char g = terms[lo].first[offset];
    std::size_t hi = lo;
    while (hi < terms.size() && terms[hi].first[offset] == g) ++hi;
    std::vector<std::pair<Word, Scalar>> group(terms.begin() + static_cast<std::ptrdiff_t>(lo),
                                               terms.begin() + static_cast<std::ptrdiff_t>(hi));
    Vector sub = nf_homogeneous(group, offset + 1, d);
    Vector img = left_mult(g - '0', rest - 1, sub);
    for (std::size_t i = 0; i < out.size(); ++i)
      if (!img[i].is_zero()) out[i] += img[i];
    lo = hi;
  }
  return out;
}

NCPoly RewriteSystem::normal_form(const NCPoly& p) const {
  std::map<int, std::vector<std::pair<Word, Scalar>>> by_degree;
  for (const auto& [w, c] : p.terms()) by_degree[static_cast<int>(w.size())].emplace_back(w, c);
  NCPoly out;
  for (const auto& [d, terms] : by_degree) out += from_vector(nf_homogeneous(terms, 0, d), d);
  return out;
}

NCPoly RewriteSystem::multiply(const NCPoly& a, const NCPoly& b) const {
  NCPoly nb = b.is_normal() ? b : normal_form(b);
  std::map<int, NCPoly> parts;
  for (const auto& [w, c] : nb.terms()) parts[static_cast<int>(w.size())] += NCPoly::word(w, c);
  std::map<int, Vector> acc;
  for (const auto& [d, part] : parts) {
    Vector base = to_vector(part, d);
    for (const auto& [u, c] : a.terms()) {
      Vector v = base;
      int deg = d;
      for (auto it = u.rbegin(); it != u.rend(); ++it) v = left_mult(*it - '0', deg++, v);
      auto [slot, inserted] = acc.try_emplace(deg, Vector(basis_dim(deg)));
      axpy(slot->second, c, v);
    }
  }
  NCPoly out;
  for (const auto& [d, v] : acc) out += from_vector(v, d);
  return out;
}

NCPoly RewriteSystem::commutator(const NCPoly& f, const NCPoly& g) const { return multiply(f, g) - multiply(g, f); }

std::vector<Matrix> RewriteSystem::action_matrices(const Matrix3& m, int maxdeg) const {
  std::vector<Matrix> out;
  out.push_back(Matrix{Vector{Scalar(1)}});
  std::vector<Vector> prev_cols{Vector{Scalar(1)}};
  for (int d = 1; d <= maxdeg; ++d) {
    std::vector<Word> words = basis(d);
    std::vector<Vector> cols;
    cols.reserve(words.size());
    const auto& ops = level(d - 1).ops;
    for (const auto& w : words) {
      int g = head(w);
      const Vector& sub = prev_cols[basis_index(w.substr(1))];
      // y_g w' maps to sum_j m[g][j] y_j phi(w')
      Combination col;
      for (int j = 1; j <= 3; ++j) {
        const Scalar& coef = m[static_cast<std::size_t>(g - 1)][static_cast<std::size_t>(j - 1)];
        if (coef.is_zero()) continue;
        for (std::size_t v = 0; v < sub.size(); ++v)
          if (!sub[v].is_zero()) col.add(coef * sub[v], ops[static_cast<std::size_t>(j - 1)][v]);
      }
      cols.push_back(col.result(words.size()));
    }
    Matrix mat = zero_matrix(words.size(), words.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r < words.size(); ++r) mat[r][c] = cols[c][r];
    out.push_back(std::move(mat));
    prev_cols = std::move(cols);
  }
  return out;
}

Matrix RewriteSystem::action_matrix(const Matrix3& m, int d) const { return action_matrices(m, d).back(); }

std::vector<Scalar> RewriteSystem::action_traces(const Matrix3& m, int maxdeg) const {
  std::string key;
  for (const auto& row : m)
    for (const auto& x : row) key += x.to_string() + ";";
  {
    std::lock_guard lock(cache_->trace_mu);
    auto it = cache_->traces.find(key);
    if (it != cache_->traces.end() && static_cast<int>(it->second.size()) > maxdeg)
      return {it->second.begin(), it->second.begin() + maxdeg + 1};
  }
  std::vector<Scalar> out;
  for (const Matrix& a : action_matrices(m, maxdeg)) {
    Scalar tr;
    for (std::size_t i = 0; i < a.size(); ++i) tr += a[i][i];
    out.push_back(tr);
  }
  std::lock_guard lock(cache_->trace_mu);
  auto& slot = cache_->traces[key];
  if (slot.size() < out.size()) slot = out;
  return out;
}

// ---------------------------------------------------------------- PBW checks

PbwReport pbw_consistency(const RewriteSystem& rs, int maxdeg, std::uint64_t seed) {
  if (maxdeg < 3) throw Error(ErrorCode::SchemaError, "pbw_consistency needs maxdeg >= 3");
  PbwReport rep;
  NCPoly y1 = NCPoly::variable(1), y3 = NCPoly::variable(3);
  NCPoly lhs = rs.multiply(y3, rs.rule(2, 1));
  NCPoly rhs = rs.multiply(rs.rule(3, 2), y1);
  if (lhs != rhs)
    throw Error(ErrorCode::PbwViolation, "overlap y3*y2*y1: " + lhs.to_string() + " vs " + rhs.to_string());

  // Left-multiplication operators must satisfy every relation on every basis word.
  const std::array<std::pair<int, int>, 3> descents{std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}};
  for (int d = 0; d + 2 <= maxdeg; ++d) {
    std::vector<Word> words = basis(d);
    for (std::size_t v = 0; v < words.size(); ++v) {
      Vector e(words.size());
      e[v] = Scalar(1);
      for (auto [j, i] : descents) {
        Vector l = rs.left_mult(j, d + 1, rs.left_mult(i, d, e));
        Vector r(basis_dim(d + 2));
        for (const auto& [ab, c] : rs.rule(j, i).terms()) {
          Vector t = rs.left_mult(ab[0] - '0', d + 1, rs.left_mult(ab[1] - '0', d, e));
          axpy(r, c, t);
        }
        for (std::size_t k = 0; k < l.size(); ++k)
          if (l[k] != r[k])
            throw Error(ErrorCode::PbwViolation, "relation y" + std::to_string(j) + "*y" + std::to_string(i) +
                                                     " fails on " + NCPoly::word(words[v]).to_string());
      }
    }
  }

  std::mt19937_64 rng(seed);
  auto random_word = [&](int len) {
    Word w;
    for (int k = 0; k < len; ++k) w += static_cast<char>('1' + rng() % 3);
    return w;
  };
  for (int t = 0; t < 60; ++t) {
    int total = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(maxdeg - 2));
    int la = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(total - 2));
    int lb = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(total - la - 1));
    int lc = total - la - lb;
    NCPoly u = NCPoly::word(random_word(la)), v = NCPoly::word(random_word(lb)), w = NCPoly::word(random_word(lc));
    NCPoly left = rs.multiply(rs.multiply(u, v), w);
    NCPoly right = rs.multiply(u, rs.multiply(v, w));
    if (left != right)
      throw Error(ErrorCode::PbwViolation,
                  "associativity on " + u.to_string() + " | " + v.to_string() + " | " + w.to_string());
    ++rep.triples_checked;
  }
  for (int d = 0; d <= maxdeg; ++d) {
    std::size_t dim = basis(d).size();
    if (dim != basis_dim(d)) throw Error(ErrorCode::PbwViolation, "basis size in degree " + std::to_string(d));
    rep.dims.push_back(dim);
  }
  return rep;
}

}  // namespace pdq
