#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pdq/error.hpp"
#include "pdq/parser.hpp"
#include "pdq/report.hpp"

using namespace pdq;

namespace {

struct Globals {
  int maxdeg = default_degree_cap();
  std::vector<std::string> bind;
  std::uint64_t seed = 1;
};

Bindings parse_bindings(const std::vector<std::string>& kv) {
  Bindings b;
  for (const auto& s : kv) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("--bind", "expected k=v, got " + s);
    b.insert_or_assign(s.substr(0, eq), parse_scalar(s.substr(eq + 1)));
  }
  return b;
}

// A case id 1..9 or a path to a case document.
CaseDefinition resolve_case(const std::string& arg) {
  if (!arg.empty() && std::all_of(arg.begin(), arg.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return load_case(std::stoi(arg));
  std::ifstream in(arg);
  if (!in) throw Error(ErrorCode::UnknownCase, arg + " is neither a case id nor a readable file");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, e.what());
  }
  return ingest_custom_case(doc);
}

RewriteSystem system_for(const CaseDefinition& c, const Globals& g) {
  RewriteSystem rs = RewriteSystem::derive(structure_constants(c.poisson));
  Bindings b = parse_bindings(g.bind);
  if (!b.empty()) rs = rs.specialized(b);
  return rs.with_degree_cap(std::max(g.maxdeg, 6));
}

VerifyOptions options(const Globals& g, const std::string& sections) {
  VerifyOptions o;
  o.maxdeg = g.maxdeg;
  o.bindings = parse_bindings(g.bind);
  o.seed = g.seed;
  std::stringstream ss(sections);
  for (std::string s; std::getline(ss, s, ',');)
    if (!s.empty()) o.sections.push_back(s);
  return o;
}

std::vector<Report> run(const std::string& target, const VerifyOptions& o) {
  if (target == "all") return verify_all(o);
  return {run_verification(resolve_case(target), o)};
}

void emit(const std::vector<Report>& rs, const std::string& format) {
  if (format == "json") std::cout << to_json(rs).dump(2) << "\n";
  else if (format == "md") std::cout << render_markdown(rs);
  else std::cout << render_text(rs);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of quantized unimodular quadratic Poisson structures"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--maxdeg", g.maxdeg, "Degree cap for series and normal forms")->check(CLI::Range(3, 40));
  app.add_option("--bind", g.bind, "Parameter binding k=v (repeatable)");
  app.add_option("--seed", g.seed, "Seed for sampled associativity checks");

  std::string target, format = "text", sections;
  auto* verify = app.add_subcommand("verify", "Run the verification pipeline");
  verify->add_option("case", target, "Case id, 'all', or a case document")->required();
  verify->add_option("--format", format, "text, json or md")->check(CLI::IsMember({"text", "json", "md"}));
  verify->add_option("--sections", sections, "Comma-separated subset of sections");

  auto* report = app.add_subcommand("report", "Print the full report");
  std::string report_format = "json";
  report->add_option("case", target, "Case id, 'all', or a case document")->required();
  report->add_option("--format", report_format, "json or md")->check(CLI::IsMember({"json", "md"}));

  std::string expr;
  auto* nf = app.add_subcommand("nf", "Normal form of a y-expression");
  nf->add_option("case", target)->required();
  nf->add_option("expr", expr)->required();

  std::string matrix;
  int deg = -1;
  auto* trace = app.add_subcommand("trace", "Trace series of a graded map against 1/det(I - t m)");
  trace->add_option("case", target)->required();
  trace->add_option("matrix", matrix, "e.g. \"[-1,0,0; 0,1,0; 0,0,1]\"")->required();
  trace->add_option("--deg", deg, "Truncation degree");

  std::vector<std::string> group;
  auto* molien = app.add_subcommand("molien", "Molien series of a finite group");
  molien->add_option("case", target)->required();
  molien->add_option("--group", group, "Generator matrix (repeatable)")->required()->allow_extra_args(false);

  auto* limit = app.add_subcommand("limit", "Semiclassical limits of the invariant presentations");
  limit->add_option("case", target)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*verify) {
      auto rs = run(target, options(g, sections));
      emit(rs, format);
      return exit_code(rs);
    }
    if (*report) {
      auto rs = run(target, options(g, ""));
      emit(rs, report_format);
      return exit_code(rs);
    }
    CaseDefinition c = resolve_case(target);
    RewriteSystem rs = system_for(c, g);
    if (*nf) {
      std::cout << rs.normal_form(parse_ncpoly(expr)).to_string() << "\n";
      return 0;
    }
    if (*trace) {
      GradedMap m = specialize(parse_matrix(matrix), parse_bindings(g.bind));
      int n = deg < 0 ? g.maxdeg : deg;
      auto t = trace_series(rs, m, n);
      auto d = det_series(m, n);
      std::cout << "trace: " << t.to_string() << "\n1/det: " << d.to_string() << "\n"
                << (t == d ? "equal" : "different") << "\n";
      return t == d ? 0 : 2;
    }
    if (*molien) {
      std::vector<GradedMap> gens;
      for (const auto& s : group) gens.push_back(parse_matrix(s));
      MatrixGroup grp = group_closure(gens);
      auto mol = molien_series(grp, g.maxdeg);
      auto tr = molien_trace_series(rs, grp, g.maxdeg);
      std::cout << "order: " << grp.order() << "\nmolien: " << mol.to_string() << "\ntrace average: " << tr.to_string()
                << "\n";
      return mol == tr ? 0 : 2;
    }
    if (*limit) {
      if (c.invariants.empty()) {
        std::cout << "no invariant entry\n";
        return 0;
      }
      for (const auto& e : c.invariants) {
        auto pres = compute_presentation(rs, e.gens);
        std::cout << "row " << e.row << " (" << e.label << "): " << semiclassical_limit(pres).to_string() << "\n";
      }
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 1;
}
