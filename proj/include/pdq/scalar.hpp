#pragma once

// Exact coefficient field: fractions of integer polynomials in the formal
// parameters over Q(zeta_m). Denominators are kept as a positive integer times
// a product of zeta-free primitive factors; equality never needs a gcd.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdq/intpoly.hpp"

namespace pdq {

class Scalar {
 public:
  Scalar() = default;
  Scalar(long c);  // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpz_class& c);
  explicit Scalar(const mpq_class& q);
  static Scalar rational(long num, long den);
  static Scalar param(std::string_view name);
  // Primitive m-th root of unity exp(2 pi i / m).
  static Scalar zeta(int m);
  static Scalar sqrt3();
  static Scalar imaginary_unit();

  bool is_zero() const { return rep_ == nullptr; }
  bool is_one() const;
  int cyclo_order() const;
  // True for elements of Q (no parameters, no zeta).
  bool is_rational() const;
  std::optional<mpq_class> as_rational() const;
  // True if no formal parameter occurs.
  bool is_numeric() const;
  bool has_param(int slot) const;
  // Rough size measure used to choose pivots.
  std::size_t complexity() const;

  Scalar operator-() const;
  Scalar inv() const;
  Scalar pow(int n) const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

  struct Factor {
    IntPoly poly;
    int exp;
  };
  struct Rep {
    IntPoly num;
    mpz_class den_const{1};
    std::vector<Factor> den;
    int order = 1;
  };
  const Rep* rep() const { return rep_.get(); }
  static Scalar from_rep(Rep r);

 private:
  std::shared_ptr<const Rep> rep_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Sum over one common denominator, normalized once.
Scalar sum_of(const std::vector<Scalar>& terms);

// Appends "c*mono" to a polynomial rendering, handling signs and
// parenthesizing compound coefficients. An empty mono means a constant term.
void append_term(std::string& out, const Scalar& c, const std::string& mono);

// Parameter name -> value. Values may be any Scalar; rational values also
// cancel removable singularities before evaluation.
using Bindings = std::map<std::string, Scalar, std::less<>>;

// Throws PoleAtSpecialization if a denominator vanishes.
Scalar specialize(const Scalar& s, const Bindings& bindings);

}  // namespace pdq
