#include <set>

#include "doctest.h"
#include "pdq/error.hpp"
#include "pdq/report.hpp"

using namespace pdq;

namespace {

const CheckRecord* find(const Report& r, const std::string& section, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.section == section && c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("status names") {
  for (Status s : {Status::Pass, Status::Fail, Status::Mismatch, Status::Logged, Status::Skipped})
    CHECK(status_from_string(to_string(s)) == s);
  CHECK_THROWS(status_from_string("maybe"));
}

TEST_CASE("first case verifies") {
  Report r = run_verification(1, {});
  CHECK(r.case_id == 1);
  CHECK(r.ok());
  CHECK(r.count(Status::Fail) == 0);
  CHECK(r.count(Status::Pass) == r.checks.size());
  std::set<std::string> sections;
  for (const auto& c : r.checks) sections.insert(c.section);
  for (const auto& s : all_sections()) CHECK(sections.count(s) == 1);
  CHECK(exit_code({r}) == 0);
}

TEST_CASE("ninth case has no reflections and no invariant entry") {
  Report r = run_verification(9, {});
  CHECK(r.ok());
  const auto* refl = find(r, "reflections", "no reflections");
  REQUIRE(refl != nullptr);
  CHECK(refl->status == Status::Pass);
  const auto* inv = find(r, "invariants", "invariant entry");
  REQUIRE(inv != nullptr);
  CHECK(inv->status == Status::Skipped);
}

TEST_CASE("a pole in the bindings becomes a failed record") {
  VerifyOptions o;
  o.bindings = {{"hbar", Scalar(-1)}};
  Report r = run_verification(3, o);
  CHECK_FALSE(r.ok());
  bool pole = false;
  for (const auto& c : r.checks)
    if (c.status == Status::Fail && c.computed.find("PoleAtSpecialization") != std::string::npos) pole = true;
  CHECK(pole);
  CHECK(exit_code({r}) == 2);
}

TEST_CASE("a numeric hbar skips the hbar-dependent checks") {
  VerifyOptions o;
  o.bindings = {{"hbar", Scalar(mpq_class(1, 3))}};
  o.sections = {"invariants", "diagram"};
  Report r = run_verification(3, o);
  CHECK(r.ok());
  const auto* d = find(r, "diagram", "semiclassical limit");
  REQUIRE(d != nullptr);
  CHECK(d->status == Status::Skipped);
  CHECK(r.count(Status::Skipped) > 1);
}

TEST_CASE("section filter") {
  VerifyOptions o;
  o.sections = {"relations", "jacobi"};
  Report r = run_verification(2, o);
  REQUIRE_FALSE(r.checks.empty());
  for (const auto& c : r.checks) CHECK((c.section == "relations" || c.section == "jacobi"));
  CHECK(r.ok());
}

TEST_CASE("unknown case id") { CHECK_THROWS_AS(run_verification(12, {}), Error); }

TEST_CASE("json round trip") {
  Report r = run_verification(9, {});
  auto j = to_json(r);
  CHECK(report_from_json(j) == r);
  auto again = run_verification(9, {});
  CHECK(to_json(again, false).dump() == to_json(r, false).dump());
  CHECK_FALSE(to_json(r, false).contains("seconds"));

  Report fake{4, {{"trace", "x", Status::Logged, "1", "2", "p", "n"}, {"pbw", "y", Status::Mismatch, "", "", "", ""}}, 1.5};
  CHECK(report_from_json(to_json(fake)) == fake);
  CHECK(exit_code({fake}) == 2);
  fake.checks.pop_back();
  CHECK(exit_code({fake}) == 0);
}

TEST_CASE("renderers mention every check") {
  Report r = run_verification(9, {});
  std::string md = render_markdown({r}), text = render_text({r});
  for (const auto& c : r.checks) {
    CHECK(md.find(c.name) != std::string::npos);
    if (c.status != Status::Pass) CHECK(text.find(c.name) != std::string::npos);
  }
}
