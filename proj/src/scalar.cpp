#include "pdq/scalar.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "pdq/error.hpp"

namespace pdq {

namespace {

using Factor = Scalar::Factor;
using Rep = Scalar::Rep;

bool factor_less(const Factor& a, const Factor& b) { return a.poly < b.poly; }

// Adds exponent `e` of `f` into a sorted factor list.
void add_factor(std::vector<Factor>& list, IntPoly f, int e) {
  auto it = std::lower_bound(list.begin(), list.end(), Factor{f, 0}, factor_less);
  if (it != list.end() && it->poly == f) {
    it->exp += e;
  } else {
    list.insert(it, Factor{std::move(f), e});
  }
}

std::vector<Factor> merge_factors(const std::vector<Factor>& a, const std::vector<Factor>& b, bool take_max) {
  std::vector<Factor> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].poly < b[j].poly)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].poly < a[i].poly) {
      out.push_back(b[j++]);
    } else {
      out.push_back(Factor{a[i].poly, take_max ? std::max(a[i].exp, b[j].exp) : a[i].exp + b[j].exp});
      ++i;
      ++j;
    }
  }
  return out;
}

bool same_den(const Rep& a, const Rep& b) {
  if (a.den_const != b.den_const || a.den.size() != b.den.size()) return false;
  for (std::size_t i = 0; i < a.den.size(); ++i)
    if (a.den[i].exp != b.den[i].exp || a.den[i].poly != b.den[i].poly) return false;
  return true;
}

IntPoly expand(const mpz_class& c, const std::vector<Factor>& fs) {
  IntPoly r(c);
  for (const auto& f : fs) r = r * f.poly.pow(f.exp);
  return r;
}

void sort_factors(std::vector<Factor>& list) { std::sort(list.begin(), list.end(), factor_less); }

// Makes the factor list pairwise coprime, merging equal entries.
void refine(std::vector<Factor>& list) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < list.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < list.size() && !changed; ++j) {
        if (list[i].poly == list[j].poly) {
          list[i].exp += list[j].exp;
          list.erase(list.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
          break;
        }
        if (probably_coprime(list[i].poly, list[j].poly)) continue;
        IntPoly g = gcd(list[i].poly, list[j].poly);
        if (g.is_constant()) continue;
        Factor fi = list[i], fj = list[j];
        list.erase(list.begin() + static_cast<std::ptrdiff_t>(j));
        list.erase(list.begin() + static_cast<std::ptrdiff_t>(i));
        IntPoly qi = *divide_exact(fi.poly, g), qj = *divide_exact(fj.poly, g);
        list.push_back(Factor{g, fi.exp + fj.exp});
        if (!qi.is_one()) list.push_back(Factor{std::move(qi), fi.exp});
        if (!qj.is_one()) list.push_back(Factor{std::move(qj), fj.exp});
        changed = true;
      }
  }
  sort_factors(list);
}

// Removes every common factor of num and the (coprime) denominator list.
bool involves_parameters(const IntPoly& p) {
  for (const auto& t : p.terms())
    for (int s = 1; s < kSlots; ++s)
      if (t.m.e[static_cast<std::size_t>(s)]) return true;
  return false;
}

void cancel_common(IntPoly& num, std::vector<Factor>& den) {
  // A nonzero element of Q(zeta) is a unit, so it shares nothing with a
  // factor that has positive degree in the parameters.
  bool unit = !involves_parameters(num);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < den.size(); ++i) {
      const IntPoly& f = den[i].poly;
      if (unit && involves_parameters(f)) continue;
      if (probably_coprime(num, f)) continue;
      IntPoly g = zeta_content_gcd(num, f);
      if (g.is_constant()) continue;
      num = *divide_exact(num, g);
      if (g == f) {
        if (--den[i].exp == 0) den.erase(den.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        Factor old = den[i];
        den.erase(den.begin() + static_cast<std::ptrdiff_t>(i));
        if (old.exp > 1) den.push_back(Factor{g, old.exp - 1});
        den.push_back(Factor{*divide_exact(old.poly, g), old.exp});
        refine(den);
      }
      changed = true;
      break;
    }
  }
}

// Multiplicity of the coprime-base element b in f.
int multiplicity(IntPoly f, const IntPoly& b) {
  int k = 0;
  while (!f.is_constant()) {
    auto q = divide_exact(f, b);
    if (!q) break;
    f = std::move(*q);
    ++k;
  }
  return k;
}

// Splits a zeta-free polynomial into denominator pieces: returns the signed
// integer content and appends monomial and primitive factors.
mpz_class split_denominator(IntPoly d, std::vector<Factor>& out) {
  mpz_class c = d.content();
  if (d.leading().c < 0) c = -c;
  d = d.divexact_scalar(c);
  Monomial m = d.min_monomial();
  if (!m.is_one()) {
    for (int s = 1; s < kSlots; ++s)
      if (m.e[s]) add_factor(out, IntPoly::variable(s), m.e[s]);
    d = d.divexact_monomial(m);
  }
  if (!d.is_one()) add_factor(out, std::move(d), 1);
  return c;
}

std::string coeff_poly_string(const IntPoly& p, int order);

}  // namespace

Scalar Scalar::from_rep(Rep r) {
  r.num = reduce_cyclotomic(r.num, r.order);
  if (r.num.is_zero()) return Scalar{};
  cancel_common(r.num, r.den);
  if (r.den_const != 1) {
    mpz_class g = r.num.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.den_const.get_mpz_t());
    if (g != 1) {
      r.num = r.num.divexact_scalar(g);
      mpz_divexact(r.den_const.get_mpz_t(), r.den_const.get_mpz_t(), g.get_mpz_t());
    }
  }
  if (!r.num.has_zeta()) r.order = 1;
  Scalar s;
  s.rep_ = std::make_shared<const Rep>(std::move(r));
  return s;
}

Scalar::Scalar(long c) {
  if (c != 0) rep_ = std::make_shared<const Rep>(Rep{IntPoly(c), 1, {}, 1});
}

Scalar::Scalar(const mpz_class& c) {
  if (c != 0) rep_ = std::make_shared<const Rep>(Rep{IntPoly(c), 1, {}, 1});
}

Scalar::Scalar(const mpq_class& q) {
  if (q == 0) return;
  mpq_class c = q;
  c.canonicalize();
  rep_ = std::make_shared<const Rep>(Rep{IntPoly(c.get_num()), c.get_den(), {}, 1});
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::param(std::string_view name) {
  return from_rep(Rep{IntPoly::variable(param_slot(name)), 1, {}, 1});
}

Scalar Scalar::zeta(int m) {
  if (m <= 0 || !is_supported_cyclotomic_order(m))
    throw Error(ErrorCode::UnsupportedCyclotomicOrder, "order " + std::to_string(m));
  return from_rep(Rep{IntPoly::variable(kZetaSlot), 1, {}, m});
}

Scalar Scalar::sqrt3() {
  Scalar z = zeta(12);
  return Scalar(2) * z - z.pow(3);
}

Scalar Scalar::imaginary_unit() { return zeta(4); }

bool Scalar::is_one() const {
  return rep_ && rep_->den.empty() && rep_->den_const == 1 && rep_->num.is_one();
}

int Scalar::cyclo_order() const { return rep_ ? rep_->order : 1; }

bool Scalar::is_rational() const { return !rep_ || (rep_->den.empty() && rep_->num.is_constant()); }

std::optional<mpq_class> Scalar::as_rational() const {
  if (!rep_) return mpq_class(0);
  if (!is_rational()) return std::nullopt;
  mpq_class q(rep_->num.constant_value(), rep_->den_const);
  q.canonicalize();
  return q;
}

bool Scalar::is_numeric() const {
  if (!rep_) return true;
  if (!rep_->den.empty()) return false;
  for (int s = 1; s < kSlots; ++s)
    if (rep_->num.has_slot(s)) return false;
  return true;
}

bool Scalar::has_param(int slot) const {
  if (!rep_) return false;
  if (rep_->num.has_slot(slot)) return true;
  for (const auto& f : rep_->den)
    if (f.poly.has_slot(slot)) return true;
  return false;
}

std::size_t Scalar::complexity() const {
  if (!rep_) return 0;
  std::size_t c = rep_->num.size();
  for (const auto& f : rep_->den) c += f.poly.size() * static_cast<std::size_t>(f.exp);
  return c + mpz_sizeinbase(rep_->den_const.get_mpz_t(), 2) / 64;
}

Scalar Scalar::operator-() const {
  if (!rep_) return *this;
  Rep r = *rep_;
  r.num = -r.num;
  Scalar s;
  s.rep_ = std::make_shared<const Rep>(std::move(r));
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Rep& x = *a.rep_;
  const Rep& y = *b.rep_;
  int order = (x.order == y.order) ? x.order : common_cyclotomic_order(x.order, y.order);
  IntPoly nx = lift_cyclotomic(x.num, x.order, order);
  IntPoly ny = lift_cyclotomic(y.num, y.order, order);
  if (same_den(x, y)) return Scalar::from_rep(Rep{nx + ny, x.den_const, x.den, order});
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), x.den_const.get_mpz_t(), y.den_const.get_mpz_t());
  // Common coprime base of both denominators, then lcm exponents.
  std::vector<Factor> base;
  for (const auto& f : x.den) base.push_back(Factor{f.poly, 1});
  for (const auto& f : y.den) base.push_back(Factor{f.poly, 1});
  refine(base);
  auto exponents = [&](const Rep& r) {
    std::vector<int> e(base.size(), 0);
    for (const auto& f : r.den)
      for (std::size_t k = 0; k < base.size(); ++k) {
        if (f.poly == base[k].poly) {
          e[k] += f.exp;
          break;
        }
        e[k] += f.exp * multiplicity(f.poly, base[k].poly);
      }
    return e;
  };
  std::vector<int> ex = exponents(x), ey = exponents(y);
  std::vector<Factor> den;
  IntPoly mx(mpz_class(l / x.den_const)), my(mpz_class(l / y.den_const));
  for (std::size_t k = 0; k < base.size(); ++k) {
    int e = std::max(ex[k], ey[k]);
    if (e == 0) continue;
    den.push_back(Factor{base[k].poly, e});
    if (e > ex[k]) mx = mx * base[k].poly.pow(e - ex[k]);
    if (e > ey[k]) my = my * base[k].poly.pow(e - ey[k]);
  }
  IntPoly num = nx * mx + ny * my;
  return Scalar::from_rep(Rep{std::move(num), l, std::move(den), order});
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar sum_of(const std::vector<Scalar>& terms) {
  std::vector<const Rep*> reps;
  for (const auto& t : terms)
    if (!t.is_zero()) reps.push_back(t.rep());
  if (reps.empty()) return Scalar{};
  if (reps.size() == 1) return Scalar::from_rep(*reps[0]);
  int order = reps[0]->order;
  for (const Rep* r : reps)
    if (r->order != order) order = common_cyclotomic_order(order, r->order);
  bool shared = std::all_of(reps.begin(), reps.end(), [&](const Rep* r) { return same_den(*reps[0], *r); });
  if (shared) {
    IntPoly num;
    for (const Rep* r : reps) num = num + lift_cyclotomic(r->num, r->order, order);
    return Scalar::from_rep(Rep{std::move(num), reps[0]->den_const, reps[0]->den, order});
  }
  mpz_class l = 1;
  std::vector<Factor> base;
  for (const Rep* r : reps) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r->den_const.get_mpz_t());
    for (const auto& f : r->den)
      if (std::none_of(base.begin(), base.end(), [&](const Factor& b) { return b.poly == f.poly; }))
        base.push_back(Factor{f.poly, 1});
  }
  refine(base);
  std::vector<std::vector<int>> ex;
  std::vector<int> top(base.size(), 0);
  for (const Rep* r : reps) {
    std::vector<int> e(base.size(), 0);
    for (const auto& f : r->den)
      for (std::size_t k = 0; k < base.size(); ++k) {
        if (f.poly == base[k].poly) {
          e[k] += f.exp;
          break;
        }
        e[k] += f.exp * multiplicity(f.poly, base[k].poly);
      }
    for (std::size_t k = 0; k < base.size(); ++k) top[k] = std::max(top[k], e[k]);
    ex.push_back(std::move(e));
  }
  std::map<std::vector<int>, IntPoly> cofactors;
  IntPoly num;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    auto it = cofactors.find(ex[i]);
    if (it == cofactors.end()) {
      IntPoly m(1);
      for (std::size_t k = 0; k < base.size(); ++k)
        if (top[k] > ex[i][k]) m = m * base[k].poly.pow(top[k] - ex[i][k]);
      it = cofactors.emplace(ex[i], std::move(m)).first;
    }
    IntPoly term = lift_cyclotomic(reps[i]->num, reps[i]->order, order) * it->second;
    num = num + term.scaled(mpz_class(l / reps[i]->den_const));
  }
  std::vector<Factor> den;
  for (std::size_t k = 0; k < base.size(); ++k)
    if (top[k] > 0) den.push_back(Factor{base[k].poly, top[k]});
  return Scalar::from_rep(Rep{std::move(num), l, std::move(den), order});
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar{};
  const Rep& x = *a.rep_;
  const Rep& y = *b.rep_;
  int order = (x.order == y.order) ? x.order : common_cyclotomic_order(x.order, y.order);
  IntPoly nx = lift_cyclotomic(x.num, x.order, order);
  IntPoly ny = lift_cyclotomic(y.num, y.order, order);
  std::vector<Factor> dx = x.den, dy = y.den;
  if (!dy.empty()) cancel_common(nx, dy);
  if (!dx.empty()) cancel_common(ny, dx);
  Rep r;
  r.order = order;
  r.num = reduce_cyclotomic(nx * ny, order);
  if (r.num.is_zero()) return Scalar{};
  r.den_const = x.den_const * y.den_const;
  r.den = merge_factors(dx, dy, false);
  if (!dx.empty() && !dy.empty()) refine(r.den);
  mpz_class g = r.num.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.den_const.get_mpz_t());
  if (g != 1) {
    r.num = r.num.divexact_scalar(g);
    mpz_divexact(r.den_const.get_mpz_t(), r.den_const.get_mpz_t(), g.get_mpz_t());
  }
  if (!r.num.has_zeta()) r.order = 1;
  Scalar s;
  s.rep_ = std::make_shared<const Rep>(std::move(r));
  return s;
}

Scalar Scalar::inv() const {
  if (!rep_) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const Rep& x = *rep_;
  IntPoly newnum = expand(x.den_const, x.den);
  IntPoly d = x.num;
  if (d.has_zeta()) {
    NormCofactor nc = cyclotomic_norm(d, x.order);
    newnum = reduce_cyclotomic(newnum * nc.cofactor, x.order);
    d = nc.norm;
  }
  Rep r;
  r.order = x.order;
  r.den_const = split_denominator(std::move(d), r.den);
  if (r.den_const < 0) {
    r.den_const = -r.den_const;
    newnum = -newnum;
  }
  r.num = std::move(newnum);
  return from_rep(std::move(r));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  return a * b.inv();
}

Scalar Scalar::pow(int n) const {
  if (n < 0) return inv().pow(-n);
  Scalar result(1);
  Scalar base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.is_zero() || b.is_zero()) return false;
  const Rep& x = *a.rep_;
  const Rep& y = *b.rep_;
  if (x.order == y.order && same_den(x, y)) return x.num == y.num;
  return (a - b).is_zero();
}

namespace {

// Printing order: parameters sorted by name, graded-lex on that order, zeta
// powers last.
struct PrintKey {
  int degree;
  std::vector<int> exps;  // in name order
  int zeta;
};

std::vector<int> name_sorted_slots() {
  std::vector<std::pair<std::string, int>> v;
  for (int s = 1; s < param_count(); ++s) v.emplace_back(param_name(s), s);
  std::sort(v.begin(), v.end());
  std::vector<int> out;
  for (auto& p : v) out.push_back(p.second);
  return out;
}

std::string coeff_poly_string(const IntPoly& p, int order) {
  if (p.is_zero()) return "0";
  std::vector<int> slots = name_sorted_slots();
  std::vector<std::pair<PrintKey, const Term*>> ts;
  for (const auto& t : p.terms()) {
    PrintKey k{0, {}, t.m.e[kZetaSlot]};
    for (int s : slots) {
      k.exps.push_back(t.m.e[s]);
      k.degree += t.m.e[s];
    }
    ts.emplace_back(std::move(k), &t);
  }
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    if (a.first.degree != b.first.degree) return a.first.degree > b.first.degree;
    if (a.first.exps != b.first.exps) return a.first.exps > b.first.exps;
    return a.first.zeta < b.first.zeta;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, t] : ts) {
    mpz_class c = t->c;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      int e = key.exps[i];
      if (!e) continue;
      std::string f = param_name(slots[i]);
      if (e > 1) f += "^" + std::to_string(e);
      parts.push_back(std::move(f));
    }
    if (key.zeta) {
      std::string f = "zeta{" + std::to_string(order) + "}";
      if (key.zeta > 1) f += "^" + std::to_string(key.zeta);
      parts.push_back(std::move(f));
    }
    if (parts.empty() || c != 1) parts.insert(parts.begin(), c.get_str());
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "*" : "") << parts[i];
  }
  return os.str();
}

}  // namespace

std::string Scalar::to_string() const {
  if (!rep_) return "0";
  const Rep& r = *rep_;
  std::string num = coeff_poly_string(r.num, r.order);
  if (r.den.empty() && r.den_const == 1) return num;
  if (r.num.size() > 1) num = "(" + num + ")";
  std::vector<std::string> parts;
  if (r.den_const != 1) parts.push_back(r.den_const.get_str());
  for (const auto& f : r.den) {
    std::string s = coeff_poly_string(f.poly, 1);
    bool atom = f.poly.size() == 1;
    if (!atom || f.exp > 1) {
      if (!atom) s = "(" + s + ")";
      if (f.exp > 1) s += "^" + std::to_string(f.exp);
    }
    parts.push_back(std::move(s));
  }
  std::string den;
  for (std::size_t i = 0; i < parts.size(); ++i) den += (i ? "*" : "") + parts[i];
  if (parts.size() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

void append_term(std::string& out, const Scalar& c, const std::string& mono) {
  std::string cs = c.to_string();
  bool neg = false;
  auto q = c.as_rational();
  if (q && *q < 0) {
    neg = true;
    cs = Scalar(mpq_class(-*q)).to_string();
  }
  std::string body;
  if (mono.empty()) {
    body = cs;
  } else if (cs == "1") {
    body = mono;
  } else {
    bool atomic = q.has_value() || cs.find_first_of("+- ") == std::string::npos;
    body = (atomic ? cs : "(" + cs + ")") + "*" + mono;
  }
  if (out.empty()) {
    out = (neg ? "-" : "") + body;
  } else {
    out += (neg ? " - " : " + ") + body;
  }
}

namespace {

Scalar evaluate(const IntPoly& p, int order, const std::vector<std::pair<int, Scalar>>& vals) {
  std::vector<bool> bound(kSlots, false);
  for (const auto& [slot, v] : vals) bound[static_cast<std::size_t>(slot)] = true;
  // Group terms by the monomial in the bound slots so each distinct power
  // product is built once.
  std::map<std::vector<int>, std::vector<Term>> groups;
  for (const auto& t : p.terms()) {
    std::vector<int> key;
    Term rest = t;
    for (const auto& [slot, v] : vals) {
      key.push_back(t.m.e[slot]);
      rest.m.e[slot] = 0;
    }
    groups[key].push_back(std::move(rest));
  }
  Scalar total;
  for (auto& [key, ts] : groups) {
    Scalar factor(1);
    for (std::size_t i = 0; i < vals.size(); ++i)
      if (key[i]) factor = factor * vals[i].second.pow(key[i]);
    Scalar rest = Scalar::from_rep(Rep{IntPoly::from_terms(std::move(ts)), 1, {}, order});
    total = total + factor * rest;
  }
  return total;
}

}  // namespace

Scalar specialize(const Scalar& s, const Bindings& bindings) {
  if (s.is_zero() || bindings.empty()) return s;
  std::vector<std::pair<int, Scalar>> vals;
  for (const auto& [name, v] : bindings) {
    auto slot = find_param_slot(name);
    if (slot && s.has_param(*slot)) vals.emplace_back(*slot, v);
  }
  if (vals.empty()) return s;
  Rep r = *s.rep();
  // Cancel removable singularities along each rational binding x = p/q.
  for (const auto& [slot, v] : vals) {
    auto q = v.as_rational();
    if (!q) continue;
    IntPoly lin = IntPoly::variable(slot).scaled(q->get_den()) - IntPoly(q->get_num());
    std::vector<Factor> extra;
    for (auto& f : r.den) {
      int e = f.exp;
      for (int k = 0; k < e; ++k) {
        auto fq = divide_exact(f.poly, lin);
        if (!fq) break;
        auto nq = divide_exact(r.num, lin);
        if (!nq) break;
        r.num = std::move(*nq);
        --f.exp;
        if (!fq->is_one()) extra.push_back(Factor{std::move(*fq), 1});
      }
    }
    for (auto& f : extra) add_factor(r.den, std::move(f.poly), f.exp);
  }
  Scalar num = evaluate(r.num, r.order, vals);
  Scalar den(r.den_const);
  for (const auto& f : r.den) {
    if (f.exp == 0) continue;
    Scalar fv = evaluate(f.poly, 1, vals);
    if (fv.is_zero())
      throw Error(ErrorCode::PoleAtSpecialization, "denominator factor " + coeff_poly_string(f.poly, 1) + " vanishes");
    den = den * fv.pow(f.exp);
  }
  return num / den;
}

}  // namespace pdq
