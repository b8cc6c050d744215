#pragma once

// Commutative polynomials in three variables and quadratic Poisson
// structures on them.

#include <array>
#include <map>
#include <string>

#include "pdq/scalar.hpp"

namespace pdq {

using Exp3 = std::array<int, 3>;

// Graded lexicographic, largest first.
struct Exp3Order {
  bool operator()(const Exp3& a, const Exp3& b) const {
    int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
    if (da != db) return da > db;
    return a > b;
  }
};

class CPoly {
 public:
  using TermMap = std::map<Exp3, Scalar, Exp3Order>;

  CPoly() = default;
  CPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  static CPoly variable(int i);  // 1-based
  static CPoly monomial(const Exp3& e, const Scalar& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const Exp3& e) const;
  // Degree with per-variable weights; -1 for zero.
  int degree(const Exp3& weights = {1, 1, 1}) const;
  bool is_homogeneous(int d, const Exp3& weights = {1, 1, 1}) const;
  std::optional<Scalar> as_constant() const;

  CPoly operator-() const;
  friend CPoly operator+(const CPoly& a, const CPoly& b);
  friend CPoly operator-(const CPoly& a, const CPoly& b);
  friend CPoly operator*(const CPoly& a, const CPoly& b);
  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o) { return *this += -o; }
  CPoly scaled(const Scalar& c) const;
  CPoly pow(int n) const;
  CPoly derivative(int i) const;  // 1-based
  // Coefficient-wise map, dropping zeros.
  template <class F>
  CPoly map_coeffs(F&& f) const {
    CPoly r;
    for (const auto& [e, c] : terms_) {
      Scalar v = f(c);
      if (!v.is_zero()) r.terms_.emplace(e, std::move(v));
    }
    return r;
  }

  friend bool operator==(const CPoly& a, const CPoly& b);
  friend bool operator!=(const CPoly& a, const CPoly& b) { return !(a == b); }

  std::string to_string(char var = 'x') const;

 private:
  TermMap terms_;
};

// Indexing pairs, always (i,j) with i<j, 1-based.
using IndexPair = std::pair<int, int>;
using StructureConstants = std::map<IndexPair, std::map<IndexPair, Scalar>>;

class PoissonStructure {
 public:
  PoissonStructure() = default;
  // No Jacobi check here; broken structures are allowed for negative tests.
  PoissonStructure(CPoly b12, CPoly b23, CPoly b31);
  static PoissonStructure from_potential(const CPoly& omega);
  static PoissonStructure from_constants(const StructureConstants& c);

  // {x_i, x_j} for any 1 <= i, j <= 3.
  CPoly bracket(int i, int j) const;
  const CPoly& b12() const { return b12_; }
  const CPoly& b23() const { return b23_; }
  const CPoly& b31() const { return b31_; }

 private:
  CPoly b12_, b23_, b31_;
};

CPoly poisson_bracket(const PoissonStructure& ps, const CPoly& f, const CPoly& g);
bool jacobi_check(const PoissonStructure& ps);
// Keys (i,j) with i<j and monomials (k,l) with k<=l; zero entries omitted.
StructureConstants structure_constants(const PoissonStructure& ps);

}  // namespace pdq
