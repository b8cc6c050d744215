#include "doctest.h"
#include "pdq/error.hpp"
#include "pdq/parser.hpp"
#include "pdq/registry.hpp"

using namespace pdq;

namespace {

RewriteSystem rs_of(const CaseDefinition& c) { return RewriteSystem::derive(structure_constants(c.poisson)); }

ErrorCode code_of(const nlohmann::json& doc) {
  try {
    ingest_custom_case(doc);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("document was accepted");
  return ErrorCode::SchemaError;
}

}  // namespace

TEST_CASE("first case") {
  const auto& c = load_case(1);
  CHECK(c.id == 1);
  CHECK(c.omega == parse_cpoly("x1^3"));
  CHECK(c.poisson.b23() == parse_cpoly("3*x1^2"));
  REQUIRE(c.relations.size() == 3);
  REQUIRE(c.invariants.size() == 1);
  CHECK(c.invariants[0].row == 1);
  CHECK(c.invariants[0].group.size() == 1);
}

TEST_CASE("every case reproduces its tables") {
  for (int id = 1; id <= 9; ++id) {
    CAPTURE(id);
    const auto& c = load_case(id);
    CHECK(c.id == id);
    CHECK(PoissonStructure::from_potential(c.omega).b12() == c.poisson.b12());
    CHECK(jacobi_check(c.poisson));
    auto rs = rs_of(c);
    for (const auto& r : c.relations) CHECK(rs.rule(r.j, r.i) == r.expected);
  }
}

TEST_CASE("reflection tables") {
  for (int id : {5, 6, 7, 9}) CHECK(load_case(id).reflections.empty());
  for (int id : {1, 2, 3, 4, 8}) CHECK_FALSE(load_case(id).reflections.empty());
  for (int id : {5, 6, 7, 9}) CHECK(load_case(id).invariants.empty());
  CHECK(load_case(4).invariants.size() == 4);
  CHECK(load_case(6).order_witness.has_value());
}

TEST_CASE("printed errata are kept next to the corrected values") {
  const auto& c7 = load_case(7);
  int printed = 0;
  for (const auto& r : c7.relations)
    if (r.printed) {
      ++printed;
      CHECK(*r.printed != r.expected);
      CHECK_FALSE(r.note.empty());
    }
  CHECK(printed == 1);
  bool family_erratum = false;
  for (const auto& f : load_case(9).automorphisms)
    if (f.printed) family_erratum = true;
  CHECK(family_erratum);
}

TEST_CASE("family instances") {
  MapFamily f{"aI", parse_matrix("[a,0,0; 0,a,0; 0,0,a]"), {{{"a", Scalar(2)}}, {{"a", Scalar(-1)}}}};
  auto inst = f.instances();
  REQUIRE(inst.size() == 2);
  CHECK(inst[0][1][1] == Scalar(2));
  MapFamily plain{"id", identity_map(), {}};
  CHECK(plain.instances().size() == 1);
}

TEST_CASE("unknown case") {
  for (int id : {0, 10, 12, -1}) {
    try {
      load_case(id);
      FAIL("expected UnknownCase");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnknownCase);
    }
  }
}

TEST_CASE("custom documents") {
  auto c = ingest_custom_case(nlohmann::json{{"omega", "x1^3"}});
  const auto& ref = load_case(1);
  CHECK(c.poisson.b12() == ref.poisson.b12());
  CHECK(c.poisson.b23() == ref.poisson.b23());
  CHECK(c.poisson.b31() == ref.poisson.b31());
  REQUIRE(c.relations.size() == 3);
  auto rs = rs_of(ref);
  for (const auto& r : c.relations) CHECK(rs.rule(r.j, r.i) == r.expected);

  auto doc = nlohmann::json::parse(R"({
    "brackets": [{"pair": [2, 3], "terms": [{"mono": [1, 1], "coeff": "3"}]}],
    "generators": ["[-1,0,0; 0,1,0; 0,0,1]"]
  })");
  auto b = ingest_custom_case(doc);
  CHECK(b.poisson.b23() == parse_cpoly("3*x1^2"));
  CHECK(b.automorphisms.size() == 1);

  CHECK(code_of(nlohmann::json::object()) == ErrorCode::SchemaError);
  CHECK(code_of(nlohmann::json::array()) == ErrorCode::SchemaError);
  CHECK(code_of(nlohmann::json{{"omega", "x1^3"}, {"colour", 1}}) == ErrorCode::SchemaError);
  auto bad = nlohmann::json::parse(R"({
    "brackets": [{"pair": [1, 2], "terms": [{"mono": [2, 2], "coeff": "1"}]},
                 {"pair": [2, 3], "terms": [{"mono": [3, 3], "coeff": "1"}]}]
  })");
  CHECK(code_of(bad) == ErrorCode::JacobiFailure);
  CHECK(code_of(nlohmann::json{{"omega", "x1^2"}}) == ErrorCode::NotHomogeneousDegree3);
  CHECK(code_of(nlohmann::json{{"omega", "x1^3 +"}}) == ErrorCode::SyntaxError);
}

TEST_CASE("specializing stored structures") {
  const auto& c7 = load_case(7);
  auto ps = specialize(c7.poisson, {{"lambda", Scalar(0)}});
  CHECK(ps.b12() == parse_cpoly("x3^2"));
  CHECK(specialize(parse_ncpoly("hbar*y1"), {{"hbar", Scalar(2)}}) == parse_ncpoly("2*y1"));
}
