#include "pdq/intpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "pdq/error.hpp"

namespace pdq {

namespace {

struct ParamRegistry {
  std::mutex mu;
  std::vector<std::string> names{"zeta"};
  std::map<std::string, int, std::less<>> slots;

  ParamRegistry() {
    for (const char* n : {"hbar", "lambda", "a", "b", "c", "d", "e", "f"}) intern(n);
  }

  int intern(std::string_view name) {
    auto it = slots.find(name);
    if (it != slots.end()) return it->second;
    if (static_cast<int>(names.size()) >= kSlots)
      throw Error(ErrorCode::TooManyParameters,
                  "at most " + std::to_string(kSlots - 1) + " parameters, cannot add '" + std::string(name) + "'");
    int slot = static_cast<int>(names.size());
    names.emplace_back(name);
    slots.emplace(std::string(name), slot);
    return slot;
  }
};

ParamRegistry& registry() {
  static ParamRegistry r;
  return r;
}

void sort_and_combine(std::vector<Term>& ts) {
  std::sort(ts.begin(), ts.end(), [](const Term& x, const Term& y) { return x.m > y.m; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < ts.size();) {
    std::size_t j = i + 1;
    mpz_class c = std::move(ts[i].c);
    while (j < ts.size() && ts[j].m == ts[i].m) {
      c += ts[j].c;
      ++j;
    }
    if (c != 0) {
      ts[out].m = ts[i].m;
      ts[out].c = std::move(c);
      ++out;
    }
    i = j;
  }
  ts.resize(out);
}

// Merge a + sign*b for sorted term lists.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].m > b[j].m) {
      out.push_back(a[i++]);
    } else if (b[j].m > a[i].m) {
      out.push_back(Term{b[j].m, subtract ? mpz_class(-b[j].c) : b[j].c});
      ++j;
    } else {
      mpz_class c = subtract ? mpz_class(a[i].c - b[j].c) : mpz_class(a[i].c + b[j].c);
      if (c != 0) out.push_back(Term{a[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(Term{b[j].m, subtract ? mpz_class(-b[j].c) : b[j].c});
  return out;
}

struct CycloData {
  int order;
  int degree;
  std::vector<int> low;  // Phi = t^degree + sum low[j] t^j
};

const CycloData* cyclo_data(int order) {
  static const CycloData table[] = {
      {1, 1, {-1}},        {2, 1, {1}},          {3, 2, {1, 1}},         {4, 2, {1, 0}},
      {6, 2, {1, -1}},     {8, 4, {1, 0, 0, 0}}, {12, 4, {1, 0, -1, 0}},
  };
  for (const auto& d : table)
    if (d.order == order) return &d;
  return nullptr;
}

mpz_class eval_at_point(const IntPoly& p, std::vector<mpz_class>& per_zeta, const std::array<long, kSlots>& point) {
  // Evaluates parameters at point, keeping the zeta exponent as an index.
  for (auto& x : per_zeta) x = 0;
  std::array<std::vector<mpz_class>, kSlots> powers;
  mpz_class v;
  for (const auto& t : p.terms()) {
    v = t.c;
    for (int s = 1; s < kSlots; ++s) {
      std::size_t e = t.m.e[s];
      if (e == 0) continue;
      auto& pw = powers[static_cast<std::size_t>(s)];
      if (pw.empty()) pw.emplace_back(1);
      while (pw.size() <= e) pw.push_back(pw.back() * point[static_cast<std::size_t>(s)]);
      v *= pw[e];
    }
    std::size_t z = t.m.e[kZetaSlot];
    if (z >= per_zeta.size()) per_zeta.resize(z + 1);
    per_zeta[z] += v;
  }
  return per_zeta.empty() ? mpz_class(0) : per_zeta[0];
}

const std::array<long, kSlots>& probe_point() {
  static const std::array<long, kSlots> pt = {0, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61};
  return pt;
}

}  // namespace

int param_slot(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  return r.intern(name);
}

std::optional<int> find_param_slot(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  auto it = r.slots.find(name);
  if (it == r.slots.end()) return std::nullopt;
  return it->second;
}

std::string param_name(int slot) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  return r.names.at(static_cast<std::size_t>(slot));
}

int param_count() {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  return static_cast<int>(r.names.size());
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kSlots; ++i) {
    unsigned s = unsigned(a.e[i]) + unsigned(b.e[i]);
    if (s > 255) throw Error(ErrorCode::ExponentOverflow, "monomial exponent exceeds 255");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (int i = 0; i < kSlots; ++i) r.e[i] = static_cast<std::uint8_t>(b.e[i] - a.e[i]);
  return r;
}

IntPoly::IntPoly(long c) {
  if (c != 0) terms_.push_back(Term{Monomial{}, mpz_class(c)});
}

IntPoly::IntPoly(const mpz_class& c) {
  if (c != 0) terms_.push_back(Term{Monomial{}, c});
}

IntPoly IntPoly::monomial(const Monomial& m, const mpz_class& c) {
  IntPoly p;
  if (c != 0) p.terms_.push_back(Term{m, c});
  return p;
}

IntPoly IntPoly::variable(int slot, int power) {
  Monomial m;
  m.e[slot] = static_cast<std::uint8_t>(power);
  return monomial(m, 1);
}

IntPoly IntPoly::from_terms(std::vector<Term> terms) {
  sort_and_combine(terms);
  IntPoly p;
  p.terms_ = std::move(terms);
  return p;
}

mpz_class IntPoly::constant_value() const {
  if (terms_.empty()) return 0;
  return terms_.back().m.is_one() ? terms_.back().c : mpz_class(0);
}

bool IntPoly::has_slot(int slot) const {
  for (const auto& t : terms_)
    if (t.m.e[slot]) return true;
  return false;
}

int IntPoly::degree_in(int slot) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.m.e[slot]);
  return d;
}

Monomial IntPoly::min_monomial() const {
  if (terms_.empty()) return Monomial{};
  Monomial m = terms_[0].m;
  for (const auto& t : terms_)
    for (int i = 0; i < kSlots; ++i) m.e[i] = std::min(m.e[i], t.m.e[i]);
  return m;
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  IntPoly r;
  r.terms_ = merge(a.terms_, b.terms_, false);
  return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) return a;
  IntPoly r;
  r.terms_ = merge(a.terms_, b.terms_, true);
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly{};
  if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].m, a.terms_[0].c);
  if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].m, b.terms_[0].c);
  const IntPoly& outer = a.terms_.size() <= b.terms_.size() ? a : b;
  const IntPoly& inner = a.terms_.size() <= b.terms_.size() ? b : a;
  // Accumulate row by row with sorted merges; each row is already sorted
  // because the order is a monomial order.
  std::map<Monomial, mpz_class, std::greater<>> acc;
  for (const auto& x : outer.terms_) {
    for (const auto& y : inner.terms_) {
      Monomial m = x.m * y.m;
      auto [it, inserted] = acc.try_emplace(m);
      mpz_addmul(it->second.get_mpz_t(), x.c.get_mpz_t(), y.c.get_mpz_t());
    }
  }
  IntPoly r;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back(Term{m, std::move(c)});
  return r;
}

IntPoly IntPoly::scaled(const mpz_class& c) const {
  if (c == 0) return IntPoly{};
  IntPoly r = *this;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

IntPoly IntPoly::times_monomial(const Monomial& m, const mpz_class& c) const {
  if (c == 0) return IntPoly{};
  IntPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.m * m, t.c * c});
  return r;
}

IntPoly IntPoly::divexact_scalar(const mpz_class& c) const {
  IntPoly r = *this;
  for (auto& t : r.terms_) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
  return r;
}

IntPoly IntPoly::divexact_monomial(const Monomial& m) const {
  IntPoly r = *this;
  for (auto& t : r.terms_) t.m = quotient(t.m, m);
  return r;
}

IntPoly IntPoly::pow(int n) const {
  IntPoly result(1);
  IntPoly base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

bool operator==(const IntPoly& a, const IntPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

bool operator<(const IntPoly& a, const IntPoly& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms_[i].m != b.terms_[i].m) return a.terms_[i].m < b.terms_[i].m;
    if (a.terms_[i].c != b.terms_[i].c) return a.terms_[i].c < b.terms_[i].c;
  }
  return a.terms_.size() < b.terms_.size();
}

int cyclotomic_degree(int order) {
  const CycloData* d = cyclo_data(order);
  if (!d) throw Error(ErrorCode::UnsupportedCyclotomicOrder, "order " + std::to_string(order));
  return d->degree;
}

bool is_supported_cyclotomic_order(int order) { return cyclo_data(order) != nullptr; }

int common_cyclotomic_order(int a, int b) {
  int l = std::lcm(a, b);
  if (!is_supported_cyclotomic_order(l))
    throw Error(ErrorCode::UnsupportedCyclotomicOrder,
                "orders " + std::to_string(a) + " and " + std::to_string(b) + " need order " + std::to_string(l));
  return l;
}

IntPoly reduce_cyclotomic(const IntPoly& p, int order) {
  const CycloData* d = cyclo_data(order);
  if (!d) throw Error(ErrorCode::UnsupportedCyclotomicOrder, "order " + std::to_string(order));
  bool needs = false;
  for (const auto& t : p.terms())
    if (t.m.e[kZetaSlot] >= d->degree) {
      needs = true;
      break;
    }
  if (!needs) return p;

  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(order));
  for (const auto& t : p.terms()) {
    Term u = t;
    int k = u.m.e[kZetaSlot] % order;
    u.m.e[kZetaSlot] = 0;
    buckets[static_cast<std::size_t>(k)].push_back(std::move(u));
  }
  std::vector<IntPoly> polys(static_cast<std::size_t>(order));
  for (int k = 0; k < order; ++k) polys[k] = IntPoly::from_terms(std::move(buckets[static_cast<std::size_t>(k)]));
  for (int k = order - 1; k >= d->degree; --k) {
    if (polys[k].is_zero()) continue;
    for (int j = 0; j < d->degree; ++j) {
      int cj = d->low[static_cast<std::size_t>(j)];
      if (cj == 0) continue;
      polys[k - d->degree + j] = polys[k - d->degree + j] - polys[k].scaled(cj);
    }
    polys[k] = IntPoly{};
  }
  std::vector<Term> out;
  for (int k = 0; k < d->degree; ++k)
    for (const auto& t : polys[k].terms()) {
      Term u = t;
      u.m.e[kZetaSlot] = static_cast<std::uint8_t>(k);
      out.push_back(std::move(u));
    }
  return IntPoly::from_terms(std::move(out));
}

IntPoly lift_cyclotomic(const IntPoly& p, int from, int to) {
  if (from == to || !p.has_zeta()) return p;
  int f = to / from;
  std::vector<Term> ts;
  ts.reserve(p.size());
  for (const auto& t : p.terms()) {
    Term u = t;
    u.m.e[kZetaSlot] = static_cast<std::uint8_t>(u.m.e[kZetaSlot] * f);
    ts.push_back(std::move(u));
  }
  return reduce_cyclotomic(IntPoly::from_terms(std::move(ts)), to);
}

std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& divisor) {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (p.is_zero()) return IntPoly{};
  if (divisor.size() == 1) {
    const Term& d = divisor.leading();
    if (!d.m.divides(p.min_monomial())) return std::nullopt;
    for (const auto& t : p.terms())
      if (!mpz_divisible_p(t.c.get_mpz_t(), d.c.get_mpz_t())) return std::nullopt;
    return p.divexact_monomial(d.m).divexact_scalar(d.c);
  }
  for (int s = 0; s < kSlots; ++s)
    if (divisor.degree_in(s) > p.degree_in(s)) return std::nullopt;
  if (divisor.leading().m.total_degree() > 0) {
    // Cheap necessary condition at an integer point.
    std::vector<mpz_class> dz(1), pz(1);
    mpz_class dv = eval_at_point(divisor, dz, probe_point());
    if (dv != 0) {
      eval_at_point(p, pz, probe_point());
      for (const auto& v : pz)
        if (!mpz_divisible_p(v.get_mpz_t(), dv.get_mpz_t())) return std::nullopt;
    }
  }
  const Term& lt = divisor.leading();
  std::map<Monomial, mpz_class, std::greater<>> rem;
  for (const auto& t : p.terms()) rem.emplace_hint(rem.end(), t.m, t.c);
  std::vector<Term> quot;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lt.m.divides(top->first) || !mpz_divisible_p(top->second.get_mpz_t(), lt.c.get_mpz_t()))
      return std::nullopt;
    Term q{quotient(top->first, lt.m), mpz_class()};
    mpz_divexact(q.c.get_mpz_t(), top->second.get_mpz_t(), lt.c.get_mpz_t());
    rem.erase(top);
    for (std::size_t k = 1; k < divisor.terms().size(); ++k) {
      const Term& d = divisor.terms()[k];
      auto [it, inserted] = rem.try_emplace(q.m * d.m);
      mpz_submul(it->second.get_mpz_t(), q.c.get_mpz_t(), d.c.get_mpz_t());
      if (it->second == 0) rem.erase(it);
    }
    quot.push_back(std::move(q));
  }
  return IntPoly::from_terms(std::move(quot));
}

namespace {

using UPoly = std::vector<IntPoly>;

UPoly to_uni(const IntPoly& p, int v) {
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(p.degree_in(v)) + 1);
  for (const auto& t : p.terms()) {
    Term u = t;
    std::size_t k = u.m.e[v];
    u.m.e[v] = 0;
    buckets[k].push_back(std::move(u));
  }
  UPoly out;
  for (auto& b : buckets) out.push_back(IntPoly::from_terms(std::move(b)));
  return out;
}

IntPoly from_uni(const UPoly& u, int v) {
  std::vector<Term> ts;
  for (std::size_t k = 0; k < u.size(); ++k)
    for (const auto& t : u[k].terms()) {
      Term w = t;
      w.m.e[v] = static_cast<std::uint8_t>(k);
      ts.push_back(std::move(w));
    }
  return IntPoly::from_terms(std::move(ts));
}

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

IntPoly positive(IntPoly p) {
  if (!p.is_zero() && p.leading().c < 0) p = -p;
  return p;
}

IntPoly uni_content(const UPoly& u) {
  IntPoly g;
  for (const auto& c : u) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? positive(c) : gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

UPoly uni_divide(const UPoly& u, const IntPoly& c) {
  UPoly out;
  for (const auto& x : u) out.push_back(x.is_zero() ? x : *divide_exact(x, c));
  return out;
}

// lc(b)^k a - q b with deg < deg b.
UPoly pseudo_remainder(UPoly r, const UPoly& b) {
  std::size_t db = b.size() - 1;
  const IntPoly& lb = b.back();
  trim(r);
  while (!r.empty() && r.size() - 1 >= db) {
    IntPoly lr = r.back();
    std::size_t s = r.size() - 1 - db;
    for (auto& x : r) x = x * lb;
    for (std::size_t k = 0; k <= db; ++k) r[k + s] = r[k + s] - lr * b[k];
    trim(r);
  }
  return r;
}

int lowest_slot(const IntPoly& a, const IntPoly& b) {
  for (int s = 1; s < kSlots; ++s)
    if (a.has_slot(s) || b.has_slot(s)) return s;
  return -1;
}

}  // namespace

namespace {

mpz_class max_abs(const IntPoly& p) {
  mpz_class m = 0;
  for (const auto& t : p.terms())
    if (abs(t.c) > m) m = abs(t.c);
  return m;
}

IntPoly eval_slot(const IntPoly& p, int v, const mpz_class& x) {
  std::vector<Term> ts;
  ts.reserve(p.size());
  for (const auto& t : p.terms()) {
    Term u = t;
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), x.get_mpz_t(), u.m.e[v]);
    u.c *= pw;
    u.m.e[v] = 0;
    ts.push_back(std::move(u));
  }
  return IntPoly::from_terms(std::move(ts));
}

// Inverse of eval_slot for a gcd image, using symmetric x-adic digits.
IntPoly interpolate(const IntPoly& g, int v, const mpz_class& x) {
  std::vector<Term> ts;
  mpz_class half = x / 2;
  for (const auto& t : g.terms()) {
    mpz_class c = t.c;
    int i = 0;
    while (c != 0) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
      if (r > half) r -= x;
      if (r != 0) {
        if (i > 255) throw Error(ErrorCode::ExponentOverflow, "gcd interpolation");
        Term u = t;
        u.m.e[v] = static_cast<std::uint8_t>(i);
        u.c = r;
        ts.push_back(std::move(u));
      }
      c = (c - r) / x;
      ++i;
    }
  }
  return IntPoly::from_terms(std::move(ts));
}

IntPoly prs_gcd(const IntPoly& a, const IntPoly& b);

// Heuristic gcd of integer-primitive polynomials; nullopt if it gives up.
std::optional<IntPoly> heu_gcd(const IntPoly& a, const IntPoly& b) {
  int v = -1;
  for (int s = 1; s < kSlots && v < 0; ++s)
    if (a.has_slot(s) && b.has_slot(s)) v = s;
  if (v < 0) return std::nullopt;
  mpz_class x = 2 * std::min(max_abs(a), max_abs(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    IntPoly ea = eval_slot(a, v, x), eb = eval_slot(b, v, x);
    if (!ea.is_zero() && !eb.is_zero()) {
      IntPoly g = interpolate(gcd(ea, eb), v, x);
      if (!g.is_zero()) {
        g = g.divexact_scalar(g.content());
        if (g.leading().c < 0) g = -g;
        if (g.is_one()) return g;
        if (divide_exact(a, g) && divide_exact(b, g)) return g;
      }
    }
    x = x * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return positive(b);
  if (b.is_zero()) return positive(a);
  mpz_class ca = a.content(), cb = b.content(), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_constant() || b.is_constant()) return IntPoly(c);
  if (a == b) return positive(a);
  IntPoly pa = a.divexact_scalar(ca), pb = b.divexact_scalar(cb);
  if (auto g = heu_gcd(pa, pb)) return g->scaled(c);
  try {
    return prs_gcd(a, b);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ExponentOverflow) throw;
    // Too large to reduce; treating as coprime only costs reduction.
    return IntPoly(c);
  }
}

namespace {

IntPoly prs_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return positive(b);
  if (b.is_zero()) return positive(a);
  if (a.is_constant() || b.is_constant()) {
    mpz_class g = a.content();
    mpz_class h = b.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h.get_mpz_t());
    return IntPoly(g);
  }
  if (a == b) return positive(a);
  int v = lowest_slot(a, b);
  if (!a.has_slot(v)) return gcd(a, uni_content(to_uni(b, v)));
  if (!b.has_slot(v)) return gcd(uni_content(to_uni(a, v)), b);
  UPoly ua = to_uni(a, v), ub = to_uni(b, v);
  IntPoly ca = uni_content(ua), cb = uni_content(ub);
  IntPoly c = gcd(ca, cb);
  ua = uni_divide(ua, ca);
  ub = uni_divide(ub, cb);
  if (ua.size() < ub.size()) std::swap(ua, ub);
  while (!ub.empty()) {
    UPoly r = pseudo_remainder(ua, ub);
    ua = std::move(ub);
    if (r.empty()) {
      ub.clear();
    } else {
      ub = uni_divide(r, uni_content(r));
    }
  }
  ua = uni_divide(ua, uni_content(ua));
  return positive(c * from_uni(ua, v));
}

}  // namespace

IntPoly zeta_content_gcd(const IntPoly& p, const IntPoly& f) {
  if (!p.has_zeta()) return gcd(p, f);
  std::vector<std::vector<Term>> parts;
  for (const auto& t : p.terms()) {
    std::size_t z = t.m.e[kZetaSlot];
    if (z >= parts.size()) parts.resize(z + 1);
    Term u = t;
    u.m.e[kZetaSlot] = 0;
    parts[z].push_back(std::move(u));
  }
  IntPoly g = positive(f);
  for (auto& part : parts) {
    if (part.empty()) continue;
    g = gcd(g, IntPoly::from_terms(std::move(part)));
    if (g.is_constant()) break;
  }
  return g;
}

bool probably_coprime(const IntPoly& p, const IntPoly& f) {
  // Two points, so that a small prime shared by chance at one of them does
  // not force a full gcd.
  static const std::array<std::array<long, kSlots>, 2> points = {{
      {0, 1009, 1013, 1019, 1021, 1031, 1033, 1039, 1049, 1051, 1061, 1063, 1069, 1087, 1091, 1093},
      {0, 2003, 2011, 2017, 2027, 2029, 2039, 2053, 2063, 2069, 2081, 2083, 2087, 2089, 2099, 2111},
  }};
  std::vector<mpz_class> fz(1), pz(1);
  for (const auto& pt : points) {
    mpz_class fv = eval_at_point(f, fz, pt);
    if (fv == 0) continue;
    eval_at_point(p, pz, pt);
    mpz_class g = fv;
    for (const auto& x : pz) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return true;
  }
  return false;
}

namespace {

IntPoly det_small(const std::vector<std::vector<IntPoly>>& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  IntPoly acc;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<IntPoly>> minor(n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) minor[r - 1].push_back(m[r][k]);
    IntPoly term = m[0][c] * det_small(minor);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

NormCofactor cyclotomic_norm(const IntPoly& n, int order) {
  int phi = cyclotomic_degree(order);
  if (!n.has_zeta() || phi == 1) return {n, IntPoly(1)};
  std::size_t k = static_cast<std::size_t>(phi);
  // mat[r][j] = coefficient of zeta^r in n * zeta^j.
  std::vector<std::vector<IntPoly>> mat(k, std::vector<IntPoly>(k));
  for (std::size_t j = 0; j < k; ++j) {
    Monomial zj;
    zj.e[kZetaSlot] = static_cast<std::uint8_t>(j);
    IntPoly col = reduce_cyclotomic(n.times_monomial(zj, 1), order);
    std::vector<std::vector<Term>> rows(k);
    for (const auto& t : col.terms()) {
      Term u = t;
      std::size_t r = u.m.e[kZetaSlot];
      u.m.e[kZetaSlot] = 0;
      rows[r].push_back(std::move(u));
    }
    for (std::size_t r = 0; r < k; ++r) mat[r][j] = IntPoly::from_terms(std::move(rows[r]));
  }
  IntPoly norm;
  std::vector<Term> cof;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::vector<IntPoly>> minor(k - 1);
    for (std::size_t r = 1; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c)
        if (c != i) minor[r - 1].push_back(mat[r][c]);
    IntPoly ci = det_small(minor);
    if (i % 2 == 1) ci = -ci;
    norm = norm + mat[0][i] * ci;
    for (const auto& t : ci.terms()) {
      Term u = t;
      u.m.e[kZetaSlot] = static_cast<std::uint8_t>(i);
      cof.push_back(std::move(u));
    }
  }
  return {norm, IntPoly::from_terms(std::move(cof))};
}

}  // namespace pdq
