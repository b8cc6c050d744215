#pragma once

// Invariant subalgebras: Reynolds averaging, fixed subspaces, generator
// presentations with their commutators, semiclassical limits and comparison
// of the resulting Poisson structures.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pdq/reflection.hpp"

namespace pdq {

CPoly reynolds(const MatrixGroup& g, const CPoly& p);
NCPoly reynolds(const RewriteSystem& rs, const MatrixGroup& g, const NCPoly& p);
std::vector<NCPoly> fixed_subspace_basis(const RewriteSystem& rs, const MatrixGroup& g, int d);

// Commuting letters; y_i becomes x_i.
CPoly commutative_image(const NCPoly& p);

struct GeneratorSet {
  std::array<NCPoly, 3> w;
  std::array<int, 3> degrees{};
};

// Polynomials in z are NCPoly whose letter i stands for z_i.
NCPoly substitute_generators(const RewriteSystem& rs, const GeneratorSet& gens, const NCPoly& z);
// Writes a homogeneous element as a combination of ordered monomials
// z1^a z2^b z3^c. Throws NotExpressible.
NCPoly express_in_generators(const RewriteSystem& rs, const GeneratorSet& gens, const NCPoly& target);

// Pairs (1,2), (2,3), (3,1).
inline constexpr std::array<IndexPair, 3> kCyclicPairs{IndexPair{1, 2}, IndexPair{2, 3}, IndexPair{3, 1}};

struct InvariantPresentation {
  GeneratorSet gens;
  std::map<IndexPair, NCPoly> commutators;  // [w_i, w_j] in z
};

InvariantPresentation compute_presentation(const RewriteSystem& rs, const GeneratorSet& gens);

struct ExpectedCommutator {
  IndexPair pair;
  NCPoly value;  // in z
  // When set, only the coefficient of `monomial` is checked: it must be
  // hbar times something equal to `leading` at hbar = 0, and no other
  // monomial may occur.
  bool leading_only = false;
  Word monomial{};
  Scalar leading{};
};

struct InvariantCheck {
  std::string name;
  bool ok = false;
  std::string computed;
  std::string expected;
};

struct InvariantReport {
  std::vector<InvariantCheck> checks;
  InvariantPresentation presentation;
  bool ok() const;
};

InvariantReport verify_case_invariants(const RewriteSystem& rs, const MatrixGroup& g, const GeneratorSet& gens,
                                       const std::vector<ExpectedCommutator>& expected);

// det of the Jacobian of (p, q) in the variables (a, b), 1-based.
CPoly jacobian_independence(const CPoly& p, const CPoly& q, std::pair<int, int> vars);

bool hilbert_match(const MatrixGroup& g, const std::array<int, 3>& degrees, int n);
// Number of z1^a z2^b z3^c of weighted degree d.
std::size_t monomial_count(const std::array<int, 3>& degrees, int d);

struct LimitStructure {
  std::map<IndexPair, CPoly> brackets;  // keyed by kCyclicPairs, variables z
  std::array<int, 3> degrees{};

  CPoly bracket(int i, int j) const;
  std::string to_string() const;
};

// Throws NotDivisibleByHbar.
LimitStructure semiclassical_limit(const InvariantPresentation& pres);
// Brackets of commutative invariants v_i, rewritten in the v_i.
// Throws NotExpressible.
LimitStructure classical_invariant_bracket(const PoissonStructure& ps, const std::array<CPoly, 3>& v,
                                           const std::array<int, 3>& degrees);

// z_i -> scale[i] * z_{perm[i]}, perm 0-based.
struct Relabeling {
  std::array<int, 3> perm{0, 1, 2};
  std::array<Scalar, 3> scale{Scalar(1), Scalar(1), Scalar(1)};

  bool is_identity() const;
  std::string to_string() const;
};

std::optional<Relabeling> compare_structures(const LimitStructure& s, const LimitStructure& t);

}  // namespace pdq
