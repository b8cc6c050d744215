#pragma once

// Running the per-case verification pipeline and serializing its results.

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "pdq/registry.hpp"

namespace pdq {

// Logged marks a documented disagreement with a printed table entry where
// the computed value is the one that checks out; it does not fail a run.
enum class Status { Pass, Fail, Mismatch, Logged, Skipped };
std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct CheckRecord {
  std::string section;
  std::string name;
  Status status = Status::Pass;
  std::string computed;
  std::string expected;
  std::string provenance;
  std::string note;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct Report {
  int case_id = 0;
  std::vector<CheckRecord> checks;
  double seconds = 0;

  bool ok() const;
  std::size_t count(Status s) const;
  friend bool operator==(const Report&, const Report&) = default;
};

// Section names in pipeline order.
const std::vector<std::string>& all_sections();

struct VerifyOptions {
  // Series truncation; PBW runs to min(maxdeg, 6).
  int maxdeg = default_degree_cap();
  Bindings bindings;
  std::vector<std::string> sections;  // empty means all
  std::uint64_t seed = 1;
};

// Never throws for engine errors; they become failed records.
Report run_verification(const CaseDefinition& c, const VerifyOptions& opts);
Report run_verification(int id, const VerifyOptions& opts);
// Cases 1..9 concurrently, in id order.
std::vector<Report> verify_all(const VerifyOptions& opts);

nlohmann::json to_json(const Report& r, bool with_timing = true);
nlohmann::json to_json(const std::vector<Report>& rs, bool with_timing = true);
Report report_from_json(const nlohmann::json& j);
std::string render_markdown(const std::vector<Report>& rs);
std::string render_text(const std::vector<Report>& rs);

// 0 when every executed check passed or was logged, else 2.
int exit_code(const std::vector<Report>& rs);

}  // namespace pdq
