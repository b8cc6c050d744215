#pragma once

// The nine unimodular quadratic cases with their expected tables, and
// user-supplied cases read from JSON.

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pdq/invariants.hpp"

namespace pdq {

// A parametric matrix and the bindings it is sampled at. No samples means
// the matrix is used as written.
struct MapFamily {
  std::string name;
  GradedMap matrix;
  std::vector<Bindings> samples;
  // The matrix as printed, when it differs from `matrix`; `note` says why.
  std::optional<GradedMap> printed{};
  std::string note{};

  std::vector<GradedMap> instances() const;
};

struct RelationEntry {
  int j = 0, i = 0;  // rule for y_j y_i
  NCPoly expected;
  // Set when the printed table entry differs from the value it must have;
  // `note` says why.
  std::optional<NCPoly> printed;
  std::string note{};
};

struct InvariantEntry {
  int row = 0;
  std::string label;
  std::vector<GradedMap> group;  // generators, may carry parameters
  GeneratorSet gens;
  std::vector<ExpectedCommutator> commutators;
  // Printed value per pair when it disagrees with `commutators`.
  std::map<IndexPair, NCPoly> printed_commutators;
  LimitStructure published_limit;
  std::string note{};
  // First sample is the symbolic one (empty bindings).
  std::vector<Bindings> samples;
  // Compare the image of the generators with the invariants degree by
  // degree, as surjectivity evidence.
  bool check_surjectivity = false;
};

// A map whose trace series is known in closed form: 1/denominator(t).
struct TraceOracle {
  std::string label;
  GradedMap map;
  std::vector<Scalar> denominator;
};

struct CaseDefinition {
  int id = 0;
  std::string omega_text;
  CPoly omega;
  PoissonStructure poisson{CPoly{}, CPoly{}, CPoly{}};
  std::vector<RelationEntry> relations;
  std::vector<MapFamily> automorphisms;
  std::vector<GradedMap> non_automorphisms;
  std::vector<MapFamily> reflections;
  std::vector<InvariantEntry> invariants;
  std::vector<TraceOracle> trace_oracles;
  // A sampled automorphism of finite order not dividing 4.
  std::optional<GradedMap> order_witness;
  // Rational points used for the full-degree trace check when the symbolic
  // computation is too large; `symbolic_trace_degree` caps the symbolic one.
  std::vector<Bindings> trace_points;
  int symbolic_trace_degree = 1 << 20;
  // Extra parameter groups from custom documents.
  std::vector<std::vector<GradedMap>> groups;
};

// Throws UnknownCase.
const CaseDefinition& load_case(int id);

// Throws SchemaError, JacobiFailure, SingularRelationSystem, SyntaxError.
CaseDefinition ingest_custom_case(const nlohmann::json& doc);

PoissonStructure specialize(const PoissonStructure& ps, const Bindings& b);
NCPoly specialize(const NCPoly& p, const Bindings& b);
CPoly specialize(const CPoly& p, const Bindings& b);

}  // namespace pdq
