#pragma once

// Sparse multivariate integer polynomials over the formal parameters and a
// single cyclotomic generator. This is the representation underneath Scalar;
// nothing here knows about fractions.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <cstring>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pdq {

// Slot 0 holds the exponent of the cyclotomic generator, slots 1.. hold the
// registered parameters.
inline constexpr int kSlots = 16;
inline constexpr int kZetaSlot = 0;

// Interns parameter names to slots. Thread-safe, append-only.
int param_slot(std::string_view name);
std::optional<int> find_param_slot(std::string_view name);
std::string param_name(int slot);
// Number of occupied slots, including the zeta slot.
int param_count();

struct Monomial {
  std::array<std::uint8_t, kSlots> e{};

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return std::memcmp(a.e.data(), b.e.data(), kSlots) == 0;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  // Lexicographic with slot 0 most significant.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return std::memcmp(a.e.data(), b.e.data(), kSlots) < 0;
  }
  friend bool operator>(const Monomial& a, const Monomial& b) { return b < a; }

  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }
  int total_degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool divides(const Monomial& other) const {
    for (int i = 0; i < kSlots; ++i)
      if (e[i] > other.e[i]) return false;
    return true;
  }
};

Monomial operator*(const Monomial& a, const Monomial& b);
// Requires a.divides(b).
Monomial quotient(const Monomial& b, const Monomial& a);

struct Term {
  Monomial m;
  mpz_class c;
};

// Terms are kept strictly descending by Monomial with nonzero coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(long c);
  explicit IntPoly(const mpz_class& c);
  static IntPoly monomial(const Monomial& m, const mpz_class& c);
  static IntPoly variable(int slot, int power = 1);
  // Takes arbitrary terms; sorts and combines.
  static IntPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c == 1; }
  mpz_class constant_value() const;
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  bool has_slot(int slot) const;
  int degree_in(int slot) const;
  bool has_zeta() const { return has_slot(kZetaSlot); }
  Monomial min_monomial() const;

  // Positive gcd of all coefficients; 0 for the zero polynomial.
  mpz_class content() const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly scaled(const mpz_class& c) const;
  IntPoly times_monomial(const Monomial& m, const mpz_class& c) const;
  // Exact division of every coefficient.
  IntPoly divexact_scalar(const mpz_class& c) const;
  IntPoly divexact_monomial(const Monomial& m) const;
  IntPoly pow(int n) const;

  friend bool operator==(const IntPoly& a, const IntPoly& b);
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }
  // Total order used to keep factor lists canonical.
  friend bool operator<(const IntPoly& a, const IntPoly& b);

 private:
  std::vector<Term> terms_;
};

// Number of nonzero powers of the generator kept after reduction, i.e. the
// degree of the m-th cyclotomic polynomial.
int cyclotomic_degree(int order);
bool is_supported_cyclotomic_order(int order);
// Smallest supported order containing both; throws UnsupportedCyclotomicOrder.
int common_cyclotomic_order(int a, int b);

// Reduces powers of the generator modulo the order-th cyclotomic polynomial.
IntPoly reduce_cyclotomic(const IntPoly& p, int order);
// Re-expresses a polynomial in zeta_from as one in zeta_to (from | to).
IntPoly lift_cyclotomic(const IntPoly& p, int from, int to);

// Exact division by a zeta-free divisor. Returns nullopt if the divisor does
// not divide p.
std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& divisor);

// Greatest common divisor of zeta-free polynomials (primitive PRS over the
// lowest present parameter, recursively); positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
// gcd of a zeta-free f with every zeta-coefficient of p.
IntPoly zeta_content_gcd(const IntPoly& p, const IntPoly& f);
// Evaluation test at a large integer point: true when the values are coprime,
// which rules out any common factor short of one evaluating to +-1 there.
// Only used to skip reductions, never for correctness.
bool probably_coprime(const IntPoly& p, const IntPoly& f);

// Norm and cofactor of a reduced element n of Z[params][zeta]/Phi_order:
// n * cofactor == norm, with norm free of zeta.
struct NormCofactor {
  IntPoly norm;
  IntPoly cofactor;
};
NormCofactor cyclotomic_norm(const IntPoly& n, int order);

}  // namespace pdq
