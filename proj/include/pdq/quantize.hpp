#pragma once

// Noncommutative polynomials in y1,y2,y3 and the quantized rewrite system.
// Normal forms come from per-degree left-multiplication operators on the
// ordered monomial basis; see RewriteSystem.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pdq/linalg.hpp"
#include "pdq/poisson.hpp"
#include "pdq/scalar.hpp"

namespace pdq {

// Letters '1'..'3'.
using Word = std::string;

struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

bool is_normal_word(const Word& w);

class NCPoly {
 public:
  using TermMap = std::map<Word, Scalar, WordOrder>;

  NCPoly() = default;
  NCPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  static NCPoly variable(int i);  // 1-based
  static NCPoly word(const Word& w, const Scalar& c = Scalar(1));

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_normal() const;
  int degree() const;  // -1 for zero
  bool is_homogeneous(int d) const;
  Scalar coeff(const Word& w) const;

  NCPoly operator-() const;
  friend NCPoly operator+(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator-(const NCPoly& a, const NCPoly& b);
  // Free (concatenation) product; no relations applied.
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o) { return *this += -o; }
  NCPoly scaled(const Scalar& c) const;
  NCPoly pow(int n) const;
  template <class F>
  NCPoly map_coeffs(F&& f) const {
    NCPoly r;
    for (const auto& [w, c] : terms_) {
      Scalar v = f(c);
      if (!v.is_zero()) r.terms_.emplace(w, std::move(v));
    }
    return r;
  }

  friend bool operator==(const NCPoly& a, const NCPoly& b);
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  std::string to_string(char var = 'y') const;

 private:
  TermMap terms_;
};

// Ordered words y1^i y2^j y3^k of length d in graded-lex order.
std::vector<Word> basis(int d);
std::size_t basis_dim(int d);
std::size_t basis_index(const Word& normal);

// Degree cap from PDQ_MAXDEG, else 8; overridable process-wide.
int default_degree_cap();
void set_default_degree_cap(int cap);

using Matrix3 = std::array<std::array<Scalar, 3>, 3>;

class RewriteSystem {
 public:
  // Rules for y2y1, y3y1, y3y2; each must be normal and homogeneous of degree 2.
  RewriteSystem(NCPoly r21, NCPoly r31, NCPoly r32, int degree_cap = default_degree_cap());

  // Quantized relations with a symbolic hbar. Throws SingularRelationSystem.
  static RewriteSystem derive(const StructureConstants& c);
  // Throws PoleAtSpecialization when a rule coefficient has a pole.
  RewriteSystem specialized(const Bindings& b) const;
  RewriteSystem with_degree_cap(int cap) const;

  const NCPoly& rule(int j, int i) const;
  int degree_cap() const { return cap_; }

  NCPoly normal_form(const NCPoly& p) const;
  // normal_form(a * b).
  NCPoly multiply(const NCPoly& a, const NCPoly& b) const;
  NCPoly commutator(const NCPoly& f, const NCPoly& g) const;

  // Image of basis word v (degree d) under left multiplication by y_g, as a
  // coordinate vector in degree d+1.
  const Vector& left_mult(int g, int d, std::size_t v) const;
  Vector left_mult(int g, int d, const Vector& x) const;
  Vector to_vector(const NCPoly& homogeneous_normal, int d) const;
  NCPoly from_vector(const Vector& v, int d) const;

  // Matrix of the algebra map y_i -> sum_j m[i][j] y_j on degree d, columns
  // indexed by the input basis.
  Matrix action_matrix(const Matrix3& m, int d) const;
  std::vector<Matrix> action_matrices(const Matrix3& m, int maxdeg) const;
  // Traces of the action on degrees 0..maxdeg, memoized per map.
  std::vector<Scalar> action_traces(const Matrix3& m, int maxdeg) const;

 private:
  struct Level;
  struct Cache;
  const Level& level(int d) const;
  Vector nf_homogeneous(const std::vector<std::pair<Word, Scalar>>& terms, std::size_t offset, int d) const;

  std::array<NCPoly, 3> rules_;  // 21, 31, 32
  int cap_;
  std::shared_ptr<Cache> cache_;
};

struct PbwReport {
  bool ok = true;
  std::string witness;
  int triples_checked = 0;
  std::vector<std::size_t> dims;
};

// Overlap y3y2y1, operator relation identities on every basis word up to
// maxdeg-2, associativity on sampled word triples, and basis dimensions.
PbwReport pbw_consistency(const RewriteSystem& rs, int maxdeg, std::uint64_t seed = 1);

}  // namespace pdq
