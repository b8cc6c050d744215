// One line per acceptance criterion. Exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pdq/error.hpp"
#include "pdq/parser.hpp"
#include "pdq/report.hpp"

using namespace pdq;

namespace {

int failures = 0;

void line(int n, bool ok, const std::string& what, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << n << " " << what << ": " << detail << std::endl;
}

RewriteSystem rs_of(const CaseDefinition& c) { return RewriteSystem::derive(structure_constants(c.poisson)); }

std::string row_prefix(const InvariantEntry& e) { return "row " + std::to_string(e.row) + " (" + e.label + ")"; }

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

bool ends_with(const std::string& s, const std::string& p) {
  return s.size() >= p.size() && s.compare(s.size() - p.size(), p.size(), p) == 0;
}

std::vector<const CheckRecord*> records(const std::vector<Report>& rs, int id, const std::string& section) {
  std::vector<const CheckRecord*> out;
  for (const auto& r : rs)
    if (r.case_id == id)
      for (const auto& c : r.checks)
        if (c.section == section) out.push_back(&c);
  return out;
}

bool bad(Status s) { return s == Status::Fail || s == Status::Mismatch; }

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : "; ") + s;
  return out.empty() ? "none" : out;
}

void relations() {
  int printed_ok = 0, derived_ok = 0, total = 0;
  std::vector<std::string> notes;
  for (int id = 1; id <= 9; ++id) {
    const auto& c = load_case(id);
    auto rs = rs_of(c);
    for (const auto& r : c.relations) {
      ++total;
      NCPoly got = rs.rule(r.j, r.i);
      if (got == r.expected) ++derived_ok;
      if (got == r.printed.value_or(r.expected)) {
        ++printed_ok;
        continue;
      }
      std::string why = "case " + std::to_string(id) + " y" + std::to_string(r.j) + "y" + std::to_string(r.i) +
                        " printed " + r.printed->to_string() + ", derived " + got.to_string();
      NCPoly rules[4][4];
      for (const auto& e : c.relations) rules[e.j][e.i] = e.printed.value_or(e.expected);
      RewriteSystem printed(rules[2][1], rules[3][1], rules[3][2]);
      GradedMap cyclic = parse_matrix("[0,1,0; 0,0,1; 1,0,0]");
      if (is_algebra_automorphism(cyclic, rs) && !is_algebra_automorphism(cyclic, printed))
        why += " (the cyclic permutation, a symmetry of the potential, preserves the derived relations but not the "
               "printed ones)";
      notes.push_back(why);
    }
  }
  line(1, printed_ok == total, "relation tables",
       std::to_string(printed_ok) + "/" + std::to_string(total) + " equal the printed table, " +
           std::to_string(derived_ok) + "/" + std::to_string(total) + " equal the corrected table; " + join(notes));
}

void jacobi() {
  int ok = 0;
  for (int id = 1; id <= 9; ++id) ok += jacobi_check(load_case(id).poisson);
  PoissonStructure corrupted(parse_cpoly("x2^2"), parse_cpoly("x3^2"), CPoly{});
  bool neg = !jacobi_check(corrupted);
  line(2, ok == 9 && neg, "Jacobi",
       std::to_string(ok) + "/9 structures satisfy Jacobi; corrupted bracket " + (neg ? "rejected" : "accepted"));
}

void pbw(const std::vector<Report>& rs) {
  int ok = 0;
  std::vector<std::string> notes;
  std::string dims;
  for (std::size_t d = 0; d <= 6; ++d) dims += (d ? "," : "") + std::to_string((d + 1) * (d + 2) / 2);
  for (int id = 1; id <= 9; ++id) {
    bool good = true, dims_ok = false;
    for (const auto* c : records(rs, id, "pbw")) {
      if (c->status != Status::Pass) {
        good = false;
        notes.push_back("case " + std::to_string(id) + " " + c->name + ": " + c->computed);
      }
      if (c->name == "dimensions" && c->computed == dims) dims_ok = true;
    }
    ok += good && dims_ok;
  }
  line(3, ok == 9, "PBW to degree 6", std::to_string(ok) + "/9 cases consistent with dimensions " + dims +
                                          (notes.empty() ? "" : "; " + join(notes)));
}

void correspondence() {
  int fam_total = 0, fam_ok = 0, non_total = 0, non_ok = 0;
  bool counts_ok = true;
  std::vector<std::string> notes;
  for (int id = 1; id <= 9; ++id) {
    const auto& c = load_case(id);
    auto rs = rs_of(c);
    for (const auto& f : c.automorphisms) {
      if (f.samples.size() < 3 && !f.samples.empty()) counts_ok = false;
      MapFamily as_printed = f;
      if (f.printed) as_printed.matrix = *f.printed;
      bool all = true;
      bool corrected = true;
      for (const auto& m : as_printed.instances()) {
        ++fam_total;
        bool ok = correspondence_check(m, c.poisson, rs) == std::pair{true, true};
        fam_ok += ok;
        all = all && ok;
      }
      if (f.printed)
        for (const auto& m : f.instances()) corrected = corrected && correspondence_check(m, c.poisson, rs) == std::pair{true, true};
      if (!all)
        notes.push_back("case " + std::to_string(id) + " printed family " + to_string(as_printed.matrix) +
                        " is not an automorphism at its samples" +
                        (f.printed && corrected ? "; the corrected family " + to_string(f.matrix) + " passes" : ""));
    }
    if (c.non_automorphisms.size() < 5) counts_ok = false;
    for (const auto& m : c.non_automorphisms) {
      ++non_total;
      non_ok += correspondence_check(m, c.poisson, rs) == std::pair{false, false};
    }
  }
  line(4, fam_ok == fam_total && non_ok == non_total && counts_ok, "automorphism correspondence",
       std::to_string(fam_ok) + "/" + std::to_string(fam_total) + " family instances (true,true), " +
           std::to_string(non_ok) + "/" + std::to_string(non_total) + " non-automorphisms (false,false); " +
           join(notes));
}

void traces(const std::vector<Report>& rs) {
  int total = 0, ok = 0;
  bool cyclic = false, lower = false;
  std::vector<std::string> notes;
  for (int id = 1; id <= 9; ++id)
    for (const auto* c : records(rs, id, "trace")) {
      ++total;
      if (c->status == Status::Pass) ++ok;
      else notes.push_back("case " + std::to_string(id) + " " + c->name + ": " + c->computed);
      if (id == 3 && c->status == Status::Pass && c->name.find("closed form") != std::string::npos &&
          c->name.find("1/(1-t^3)") != std::string::npos)
        cyclic = true;
      if (id == 1 && c->status == Status::Pass && starts_with(c->name, "[-1,0,0; a,1,0; d,0,1]")) lower = true;
    }
  // Case 7 at degree 8 runs at rational parameter points; symbolically to degree 5.
  const auto& c7 = load_case(7);
  line(5, ok == total && cyclic && lower, "trace equals 1/det to degree 8",
       std::to_string(ok) + "/" + std::to_string(total) + " trace records; case 3 cyclic 1/(1-t^3) " +
           (cyclic ? "ok" : "missing") + "; case 1 lower-triangular family " + (lower ? "ok" : "missing") +
           "; case 7 symbolic to degree " + std::to_string(c7.symbolic_trace_degree) + ", degree 8 at " +
           std::to_string(c7.trace_points.size()) + " rational points" + (notes.empty() ? "" : "; " + join(notes)));
}

void reflections(const std::vector<Report>& rs) {
  bool ok = true;
  int mystic = 0;
  std::vector<std::string> classical_in, empty_in, notes;
  for (int id = 1; id <= 9; ++id) {
    const auto& c = load_case(id);
    auto sys = rs_of(c);
    int classical = 0;
    for (const auto& f : c.reflections)
      for (const auto& m : f.instances()) {
        auto v = classify_reflection(sys, m);
        if (v.kind == ReflectionKind::Classical) ++classical;
        else ok = false;
      }
    bool expect = id == 1 || id == 2 || id == 3 || id == 4 || id == 8;
    if (expect != (classical > 0)) ok = false;
    (classical ? classical_in : empty_in).push_back(std::to_string(id));
    for (const auto* r : records(rs, id, "reflections")) {
      if (bad(r->status)) {
        ok = false;
        notes.push_back("case " + std::to_string(id) + " " + r->name + ": " + r->computed);
      }
      if (r->name == "mystic verdicts") mystic += std::stoi(r->computed);
    }
  }
  const auto& c6 = load_case(6);
  bool m4 = c6.order_witness && !map_equal(map_pow(*c6.order_witness, 4), identity_map());
  auto joined = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
    return s;
  };
  line(6, ok && mystic == 0 && m4, "reflection table",
       "classical in cases " + joined(classical_in) + ", none in " + joined(empty_in) + ", mystic verdicts " +
           std::to_string(mystic) + ", case 6 map m^4 " + (m4 ? "!= I" : "= I") +
           (notes.empty() ? "" : "; " + join(notes)));
}

void molien(const std::vector<Report>& rs) {
  auto s3 = group_closure({parse_matrix("[0,-1,0; -1,0,0; 0,0,1]"), parse_matrix("[-1,0,0; 1,1,0; 0,0,1]")});
  auto series = molien_series(s3, 8);
  std::vector<Scalar> want;
  for (long v : {1, 1, 2, 3, 4, 5, 7, 8, 10}) want.emplace_back(v);
  bool series_ok = series.coeffs == want && s3.order() == 6;

  int hilbert = 0, dims = 0, rows = 0;
  std::vector<int> seen;
  std::vector<std::string> notes;
  for (int id = 1; id <= 9; ++id)
    for (const auto& e : load_case(id).invariants) {
      ++rows;
      if (std::find(seen.begin(), seen.end(), e.row) == seen.end()) seen.push_back(e.row);
      for (const auto* r : records(rs, id, "molien")) {
        if (!starts_with(r->name, row_prefix(e))) continue;
        if (ends_with(r->name, "hilbert match")) {
          if (r->status == Status::Pass) ++hilbert;
          else notes.push_back(r->name + ": " + r->computed);
        }
        if (ends_with(r->name, "invariant dimensions")) {
          if (r->status == Status::Pass) ++dims;
          else notes.push_back(r->name + ": " + r->computed);
        }
      }
    }
  // invariant dimensions of the S3 group against its Molien coefficients
  const auto& c4 = load_case(4);
  auto sys = rs_of(c4);
  bool s3_dims = true;
  for (int d = 0; d <= 6; ++d)
    s3_dims = s3_dims && Scalar(static_cast<long>(invariant_dimension(sys, s3, d))) == series.coeffs[static_cast<std::size_t>(d)];
  line(7, series_ok && s3_dims && hilbert == rows && dims == rows && seen.size() == 8, "Molien and Hilbert series",
       "S3 order " + std::to_string(s3.order()) + ", series " + series.to_string() + ", S3 invariant dimensions " +
           (s3_dims ? "agree" : "disagree") + " for d<=6; hilbert_match " + std::to_string(hilbert) + "/" +
           std::to_string(rows) + " entries over " + std::to_string(seen.size()) + " rows, invariant dimensions " +
           std::to_string(dims) + "/" + std::to_string(rows) + (notes.empty() ? "" : "; " + join(notes)));
}

void jacobian() {
  CPoly p = parse_cpoly("x1^2 + x2^2 + x1*x2"), q = parse_cpoly("2*x1^3 + 3*x1^2*x2 - 3*x1*x2^2 - 2*x2^3");
  CPoly got = jacobian_independence(p, q, {1, 2});
  CPoly want = parse_cpoly("27*x1^2*x2 + 27*x1*x2^2");
  std::string detail = "det [d(z2)/dy; d(z3)/dy] = " + got.to_string('y') + ", expected " + want.to_string('y');
  if (got != want && got == -want)
    detail += "; the expansion of the displayed 2x2 determinant gives the opposite sign, the swapped order gives " +
              jacobian_independence(q, p, {1, 2}).to_string('y') + "; nonzero either way";
  line(8, got == want, "Jacobian", detail);
}

void invariant_tables(const std::vector<Report>& rs) {
  int rows = 0, clean = 0, logged = 0;
  std::vector<std::string> notes;
  for (int id = 1; id <= 9; ++id)
    for (const auto& e : load_case(id).invariants) {
      ++rows;
      bool ok = true, any = false, has_log = false;
      for (const auto* r : records(rs, id, "invariants")) {
        if (!starts_with(r->name, row_prefix(e))) continue;
        any = true;
        if (bad(r->status) || r->status == Status::Skipped) {
          ok = false;
          notes.push_back(r->name + ": " + r->computed);
        }
        if (r->status == Status::Logged) has_log = true;
      }
      if (ok && any) ++clean;
      if (has_log) ++logged;
    }
  line(9, clean == rows, "invariant tables",
       std::to_string(clean) + "/" + std::to_string(rows) + " entries pass, " + std::to_string(logged) +
           " of them with logged printed-table disagreements" + (notes.empty() ? "" : "; " + join(notes)));
}

void diagram(const std::vector<Report>& rs) {
  int rows = 0, ok = 0;
  std::vector<std::string> notes;
  for (int id = 1; id <= 9; ++id)
    for (const auto& e : load_case(id).invariants) {
      ++rows;
      for (const auto* r : records(rs, id, "diagram"))
        if (r->name == row_prefix(e) + " limit vs classical invariants") {
          if (r->status == Status::Pass) ++ok;
          else notes.push_back(r->name + ": " + r->computed);
        }
    }
  // row 7 with its symbolic group parameters
  bool row7 = false;
  std::string got;
  for (const auto& e : load_case(4).invariants) {
    if (e.row != 7) continue;
    auto sys = rs_of(load_case(4));
    auto lim = semiclassical_limit(compute_presentation(sys, e.gens));
    std::array<CPoly, 3> v{commutative_image(sys.normal_form(e.gens.w[0])), commutative_image(e.gens.w[1]),
                           commutative_image(e.gens.w[2])};
    auto cl = classical_invariant_bracket(load_case(4).poisson, v, e.gens.degrees);
    auto rel = compare_structures(lim, cl);
    got = lim.to_string();
    row7 = rel && rel->is_identity() && lim.bracket(1, 2) == parse_cpoly("z3", 'z') && lim.bracket(2, 3).is_zero() &&
           lim.bracket(3, 1) == parse_cpoly("-6*z2^2", 'z');
  }
  line(10, ok == rows && row7, "diagram commutativity",
       std::to_string(ok) + "/" + std::to_string(rows) + " entries match the classical invariant brackets; row 7 " +
           got + (row7 ? " with the identity relabeling" : " without an identity match") +
           (notes.empty() ? "" : "; " + join(notes)));
}

}  // namespace

int main() {
  try {
    auto t0 = std::chrono::steady_clock::now();
    VerifyOptions opts;
    auto first = verify_all(opts);
    auto t1 = std::chrono::steady_clock::now();

    relations();
    jacobi();
    pbw(first);
    correspondence();
    traces(first);
    reflections(first);
    molien(first);
    jacobian();
    invariant_tables(first);
    diagram(first);

    auto second = verify_all(opts);
    auto t2 = std::chrono::steady_clock::now();
    std::string a = to_json(first, false).dump(), b = to_json(second, false).dump();
    std::size_t checks = 0;
    for (const auto& r : first) checks += r.checks.size();
    std::ostringstream detail;
    detail.precision(1);
    detail << std::fixed << "two verify-all runs over " << checks << " records " << (a == b ? "identical" : "differ")
           << " modulo timing (" << std::chrono::duration<double>(t1 - t0).count() << "s, "
           << std::chrono::duration<double>(t2 - t1).count() << "s)";
    line(11, a == b, "determinism", detail.str());
  } catch (const std::exception& e) {
    std::cout << "[FAIL] acceptance aborted: " << e.what() << std::endl;
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
