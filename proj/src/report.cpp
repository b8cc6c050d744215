#include "pdq/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <functional>
#include <future>
#include <sstream>

#include "pdq/error.hpp"

namespace pdq {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Mismatch: return "mismatch";
    case Status::Logged: return "logged";
    case Status::Skipped: return "skipped";
  }
  return "fail";
}

Status status_from_string(const std::string& s) {
  for (Status v : {Status::Pass, Status::Fail, Status::Mismatch, Status::Logged, Status::Skipped})
    if (to_string(v) == s) return v;
  throw Error(ErrorCode::SchemaError, "unknown status " + s);
}

bool Report::ok() const { return count(Status::Fail) == 0 && count(Status::Mismatch) == 0; }

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& c) { return c.status == s; }));
}

const std::vector<std::string>& all_sections() {
  static const std::vector<std::string> s = {"relations", "jacobi", "pbw",       "automorphisms", "trace",
                                             "reflections", "molien", "invariants", "diagram"};
  return s;
}

namespace {

std::string bool_pair(std::pair<bool, bool> p) {
  return std::string("(") + (p.first ? "true" : "false") + ", " + (p.second ? "true" : "false") + ")";
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out;
}

std::string bindings_label(const Bindings& b) {
  if (b.empty()) return "symbolic";
  std::string out;
  for (const auto& [k, v] : b) out += (out.empty() ? "" : ", ") + k + " = " + v.to_string();
  return out;
}

Bindings merged(const Bindings& base, const Bindings& extra) {
  Bindings b = base;
  for (const auto& [k, v] : extra) b.insert_or_assign(k, v);
  return b;
}

class Runner {
 public:
  Runner(const CaseDefinition& c, const VerifyOptions& o) : c_(c), o_(o) { report_.case_id = c.id; }

  Report run() {
    auto t0 = std::chrono::steady_clock::now();
    if (setup()) {
      for (const auto& s : all_sections()) {
        if (!o_.sections.empty() && std::find(o_.sections.begin(), o_.sections.end(), s) == o_.sections.end())
          continue;
        guard(s, "section", [&] { dispatch(s); });
      }
    }
    report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return std::move(report_);
  }

 private:
  void add(const std::string& section, std::string name, Status st, std::string computed, std::string expected,
           const char* provenance, std::string note = {}) {
    report_.checks.push_back({section, std::move(name), st, std::move(computed), std::move(expected), provenance,
                              std::move(note)});
  }

  void check(const std::string& section, std::string name, bool ok, std::string computed, std::string expected,
             const char* provenance) {
    add(section, std::move(name), ok ? Status::Pass : Status::Fail, std::move(computed), std::move(expected),
        provenance);
  }

  // Runs f and turns an engine error into a failed record.
  void guard(const std::string& section, const std::string& name, const std::function<void()>& f) {
    try {
      f();
    } catch (const Error& e) {
      add(section, name, Status::Fail, e.what(), "", "engine error");
    }
  }

  bool setup() {
    try {
      ps_ = o_.bindings.empty() ? c_.poisson : specialize(c_.poisson, o_.bindings);
      RewriteSystem base = RewriteSystem::derive(structure_constants(c_.poisson));
      if (!o_.bindings.empty()) base = base.specialized(o_.bindings);
      rs_ = std::make_unique<RewriteSystem>(base.with_degree_cap(std::max(o_.maxdeg, 6)));
      return true;
    } catch (const Error& e) {
      add("setup", "quantization", Status::Fail, e.what(), "", "quantized relations table");
      return false;
    }
  }

  void dispatch(const std::string& s) {
    if (s == "relations") relations();
    else if (s == "jacobi") jacobi();
    else if (s == "pbw") pbw();
    else if (s == "automorphisms") automorphisms();
    else if (s == "trace") trace();
    else if (s == "reflections") reflections();
    else if (s == "molien") molien();
    else if (s == "invariants") invariants();
    else if (s == "diagram") diagram();
  }

  static constexpr const char* kRelProv = "quantized relations table";

  void relations() {
    for (const auto& r : c_.relations) {
      std::string name = "y" + std::to_string(r.j) + "y" + std::to_string(r.i);
      NCPoly got = rs_->rule(r.j, r.i);
      NCPoly want = o_.bindings.empty() ? r.expected : specialize(r.expected, o_.bindings);
      if (got != want) {
        add("relations", name, Status::Mismatch, got.to_string(), want.to_string(), kRelProv);
      } else if (r.printed) {
        add("relations", name, Status::Logged, got.to_string(), r.printed->to_string(), kRelProv, r.note);
      } else {
        add("relations", name, Status::Pass, got.to_string(), want.to_string(), kRelProv);
      }
    }
  }

  void jacobi() {
    check("jacobi", "jacobi identity", jacobi_check(ps_), ps_brackets(), "", "superpotential bracket table");
  }

  std::string ps_brackets() const {
    return "{x1,x2} = " + ps_.bracket(1, 2).to_string() + ", {x2,x3} = " + ps_.bracket(2, 3).to_string() +
           ", {x3,x1} = " + ps_.bracket(3, 1).to_string();
  }

  void pbw() {
    int d = std::min(o_.maxdeg, 6);
    std::vector<std::size_t> want;
    for (int k = 0; k <= d; ++k) want.push_back(static_cast<std::size_t>((k + 1) * (k + 2) / 2));
    PbwReport p = pbw_consistency(*rs_, d, o_.seed);
    check("pbw", "consistency to degree " + std::to_string(d), p.ok,
          std::to_string(p.triples_checked) + " triples" + (p.witness.empty() ? "" : ", " + p.witness), "",
          "PBW basis of ordered monomials");
    check("pbw", "dimensions", p.dims == want, join(p.dims), join(want), "Hilbert series 1/(1-t)^3");
  }

  // Every sampled graded automorphism, labelled.
  std::vector<std::pair<std::string, GradedMap>> samples() const {
    std::vector<std::pair<std::string, GradedMap>> out;
    for (const auto* fams : {&c_.automorphisms, &c_.reflections})
      for (const auto& f : *fams) {
        if (f.samples.empty()) {
          out.emplace_back(f.name, f.matrix);
          continue;
        }
        for (const auto& b : f.samples) out.emplace_back(f.name + " at " + bindings_label(b), specialize(f.matrix, b));
      }
    return out;
  }

  void automorphisms() {
    static constexpr const char* prov = "graded automorphism families";
    for (const auto& f : c_.automorphisms) {
      auto inst = f.instances();
      for (std::size_t k = 0; k < inst.size(); ++k) {
        std::string name = f.name + (f.samples.empty() ? "" : " at " + bindings_label(f.samples[k]));
        guard("automorphisms", name, [&] {
          auto r = correspondence_check(inst[k], ps_, *rs_);
          check("automorphisms", name, r.first && r.second, bool_pair(r), "(true, true)", prov);
        });
      }
    }
    for (const auto& f : c_.automorphisms) {
      if (!f.printed) continue;
      for (const auto& b : f.samples) {
        std::string name = "printed " + to_string(*f.printed) + " at " + bindings_label(b);
        guard("automorphisms", name, [&] {
          auto r = correspondence_check(specialize(*f.printed, b), ps_, *rs_);
          add("automorphisms", name, r.first == r.second ? Status::Logged : Status::Fail, bool_pair(r),
              "(true, true)", prov, f.note);
        });
      }
    }
    for (const auto& m : c_.non_automorphisms) {
      guard("automorphisms", to_string(m), [&] {
        auto r = correspondence_check(m, ps_, *rs_);
        check("automorphisms", "non-automorphism " + to_string(m), !r.first && !r.second, bool_pair(r),
              "(false, false)", prov);
      });
    }
  }

  static constexpr const char* kTraceProv = "trace series equals 1/det(I - t m)";

  bool split_trace() const { return !c_.trace_points.empty() && o_.bindings.empty() && o_.maxdeg > c_.symbolic_trace_degree; }

  const RewriteSystem& point_system(std::size_t k) {
    while (point_rs_.size() <= k) {
      point_rs_.push_back(std::make_unique<RewriteSystem>(rs_->specialized(c_.trace_points[point_rs_.size()])));
    }
    return *point_rs_[k];
  }

  void trace_one(const std::string& name, const GradedMap& m) {
    if (!split_trace()) {
      guard("trace", name, [&] {
        auto t = trace_series(*rs_, m, o_.maxdeg);
        auto d = det_series(m, o_.maxdeg);
        check("trace", name + " to degree " + std::to_string(o_.maxdeg), t == d, t.to_string(), d.to_string(),
              kTraceProv);
      });
      return;
    }
    int n = c_.symbolic_trace_degree;
    guard("trace", name, [&] {
      auto t = trace_series(*rs_, m, n);
      auto d = det_series(m, n);
      check("trace", name + " to degree " + std::to_string(n), t == d, t.to_string(), d.to_string(), kTraceProv);
    });
    for (std::size_t k = 0; k < c_.trace_points.size(); ++k) {
      std::string label = name + " to degree " + std::to_string(o_.maxdeg) + " at " + bindings_label(c_.trace_points[k]);
      guard("trace", label, [&] {
        GradedMap mk = specialize(m, c_.trace_points[k]);
        auto t = trace_series(point_system(k), mk, o_.maxdeg);
        auto d = det_series(mk, o_.maxdeg);
        check("trace", label, t == d, t.to_string(), d.to_string(), kTraceProv);
      });
    }
  }

  void trace() {
    for (const auto& [name, m] : samples()) trace_one(name, m);
    for (const auto& o : c_.trace_oracles) {
      guard("trace", o.label, [&] {
        int n = split_trace() ? c_.symbolic_trace_degree : o_.maxdeg;
        auto t = trace_series(*rs_, o.map, n);
        auto want = inverse_series(o.denominator, n);
        check("trace", "closed form " + o.label, t == want, t.to_string(), want.to_string(), kTraceProv);
      });
    }
  }

  void reflections() {
    static constexpr const char* prov = "reflection table";
    int n = std::min(o_.maxdeg, c_.symbolic_trace_degree);
    if (!o_.bindings.empty()) n = o_.maxdeg;
    std::size_t classical = 0, mystic = 0;
    for (const auto& f : c_.reflections) {
      auto inst = f.instances();
      for (std::size_t k = 0; k < inst.size(); ++k) {
        std::string name = f.name + (f.samples.empty() ? "" : " at " + bindings_label(f.samples[k]));
        guard("reflections", name, [&] {
          auto v = classify_reflection(*rs_, inst[k], n);
          bool pr = is_poisson_reflection(ps_, inst[k]);
          check("reflections", name, v.kind == ReflectionKind::Classical && pr,
                to_string(v.kind) + ", order " + std::to_string(v.order) + (pr ? ", Poisson reflection" : ""),
                "classical, Poisson reflection", prov);
        });
      }
    }
    for (const auto& [name, m] : samples()) {
      guard("reflections", name, [&] {
        try {
          auto v = classify_reflection(*rs_, m, n);
          if (v.kind == ReflectionKind::Classical) ++classical;
          if (v.kind == ReflectionKind::Mystic) ++mystic;
          bool pr = is_poisson_reflection(ps_, m);
          check("reflections", "verdict " + name, (v.kind == ReflectionKind::Classical) == pr && v.kind != ReflectionKind::Mystic,
                to_string(v.kind) + ", order " + std::to_string(v.order), pr ? "classical" : "none", prov);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::InfiniteOrder) throw;
          add("reflections", "verdict " + name, Status::Pass, "infinite order, not a reflection", "none", prov);
        }
      });
    }
    check("reflections", "mystic verdicts", mystic == 0, std::to_string(mystic), "0", prov);
    if (c_.reflections.empty())
      check("reflections", "no reflections", classical == 0, std::to_string(classical) + " classical", "0 classical",
            prov);
    if (c_.order_witness) {
      guard("reflections", "order witness", [&] {
        GradedMap m4 = map_pow(*c_.order_witness, 4);
        auto ord = matrix_order(*c_.order_witness);
        check("reflections", "m^4 != I for " + to_string(*c_.order_witness), !map_equal(m4, identity_map()),
              "order " + (ord ? std::to_string(*ord) : std::string("infinite")), "m^4 != I", prov);
      });
    }
  }

  bool hbar_bound() const { return o_.bindings.count("hbar") > 0; }

  MatrixGroup group_for(const InvariantEntry& e, const Bindings& b) const {
    std::vector<GradedMap> gens;
    for (const auto& g : e.group) gens.push_back(specialize(g, b));
    return group_closure(gens);
  }

  void molien() {
    static constexpr const char* prov = "Molien's theorem";
    if (c_.invariants.empty() && c_.groups.empty()) {
      add("molien", "invariant groups", Status::Skipped, "no invariant entry", "", prov);
      return;
    }
    int n = o_.maxdeg;
    for (const auto& e : c_.invariants) {
      std::string name = "row " + std::to_string(e.row) + " (" + e.label + ")";
      guard("molien", name, [&] {
        MatrixGroup g = group_for(e, o_.bindings);
        auto mol = molien_series(g, n);
        auto hil = product_series({e.gens.degrees[0], e.gens.degrees[1], e.gens.degrees[2]}, n);
        check("molien", name + " hilbert match", hilbert_match(g, e.gens.degrees, n), mol.to_string(),
              hil.to_string(), prov);
        auto tr = molien_trace_series(*rs_, g, n);
        check("molien", name + " trace average", tr == mol, tr.to_string(), mol.to_string(), prov);
        std::vector<std::size_t> dims, want;
        for (int d = 0; d <= std::min(n, 6); ++d) {
          dims.push_back(invariant_dimension(*rs_, g, d));
          auto q = mol.coeffs[static_cast<std::size_t>(d)].as_rational();
          want.push_back(q ? static_cast<std::size_t>(q->get_num().get_ui()) : 0);
        }
        check("molien", name + " invariant dimensions", dims == want, join(dims), join(want), prov);
      });
    }
    for (std::size_t k = 0; k < c_.groups.size(); ++k) {
      guard("molien", "group " + std::to_string(k + 1), [&] {
        MatrixGroup g = group_closure(c_.groups[k]);
        auto mol = molien_series(g, n);
        auto tr = molien_trace_series(*rs_, g, n);
        check("molien", "group " + std::to_string(k + 1) + " of order " + std::to_string(g.order()), tr == mol,
              mol.to_string(), tr.to_string(), prov);
      });
    }
  }

  static constexpr const char* kInvProv = "invariant generators and commutator table";

  // Some y_i occurs in exactly one commutative generator; the other two must
  // then be algebraically independent in the remaining variables.
  void jacobian_witness(const std::string& name, const std::array<CPoly, 3>& v) {
    for (int i = 1; i <= 3; ++i) {
      std::vector<int> with;
      for (int j = 0; j < 3; ++j)
        if (!v[static_cast<std::size_t>(j)].derivative(i).is_zero()) with.push_back(j);
      if (with.size() != 1) continue;
      std::array<int, 2> others{}, vars{};
      for (int j = 0, k = 0; j < 3; ++j)
        if (j != with[0]) others[static_cast<std::size_t>(k++)] = j;
      for (int j = 1, k = 0; j <= 3; ++j)
        if (j != i) vars[static_cast<std::size_t>(k++)] = j;
      bool free_of_i = v[static_cast<std::size_t>(others[0])].derivative(i).is_zero() &&
                       v[static_cast<std::size_t>(others[1])].derivative(i).is_zero();
      if (!free_of_i) continue;
      CPoly jac = jacobian_independence(v[static_cast<std::size_t>(others[0])], v[static_cast<std::size_t>(others[1])],
                                        {vars[0], vars[1]});
      check("invariants", name + " injectivity witness: Jacobian of w" + std::to_string(others[0] + 1) + ", w" +
                              std::to_string(others[1] + 1) + " in y" + std::to_string(vars[0]) + ", y" +
                              std::to_string(vars[1]),
            !jac.is_zero(), jac.to_string('y'), "nonzero", kInvProv);
      return;
    }
    add("invariants", name + " injectivity witness", Status::Fail, "no isolated variable", "", kInvProv);
  }

  // The image of the generators fills each graded piece of the invariants.
  void surjectivity(const std::string& name, const MatrixGroup& g, const GeneratorSet& gens) {
    std::vector<std::size_t> img, inv;
    for (int d = 0; d <= std::min(o_.maxdeg, 6); ++d) {
      Matrix rows;
      const auto& w = gens.degrees;
      for (int a = 0; a * w[0] <= d; ++a)
        for (int b = 0; a * w[0] + b * w[1] <= d; ++b) {
          int rest = d - a * w[0] - b * w[1];
          if (rest % w[2]) continue;
          Word z = std::string(static_cast<std::size_t>(a), '1') + std::string(static_cast<std::size_t>(b), '2') +
                   std::string(static_cast<std::size_t>(rest / w[2]), '3');
          rows.push_back(rs_->to_vector(substitute_generators(*rs_, gens, NCPoly::word(z)), d));
        }
      img.push_back(rows.empty() ? 0 : rank(rows));
      inv.push_back(invariant_dimension(*rs_, g, d));
    }
    check("invariants", name + " surjectivity: image dimensions", img == inv, join(img), join(inv), kInvProv);
    // Whether w3 is needed as a generator once w1 and w2 are present.
    Matrix rows;
    for (const char* z : {"11", "12", "21", "22"})
      rows.push_back(rs_->to_vector(substitute_generators(*rs_, gens, NCPoly::word(z)), gens.degrees[2]));
    std::size_t r = rank(rows);
    rows.push_back(rs_->to_vector(rs_->normal_form(gens.w[2]), gens.degrees[2]));
    std::size_t r3 = rank(rows);
    add("invariants", name + " w3 against products of w1, w2", r3 == r + 1 ? Status::Pass : Status::Logged,
        "rank " + std::to_string(r) + " -> " + std::to_string(r3), "rank grows", kInvProv,
        r3 == r + 1 ? "" : "w3 lies in the subalgebra generated by w1, w2 when hbar != 0, through the w3 term of [w1,w2]");
  }

  void invariants() {
    if (c_.invariants.empty()) {
      add("invariants", "invariant entry", Status::Skipped, "no invariant entry", "", kInvProv);
      return;
    }
    for (const auto& e : c_.invariants) {
      for (const auto& sample : e.samples) {
        Bindings b = merged(o_.bindings, sample);
        std::string name = "row " + std::to_string(e.row) + " (" + e.label + "), " + bindings_label(sample);
        guard("invariants", name, [&] {
          MatrixGroup g = group_for(e, b);
          GeneratorSet gens = e.gens;
          for (auto& w : gens.w) w = specialize(w, b);
          std::vector<ExpectedCommutator> want = e.commutators;
          for (auto& c : want) c.value = specialize(c.value, b);
          InvariantReport rep = verify_case_invariants(*rs_, g, gens, want);
          for (const auto& c : rep.checks) {
            IndexPair p{0, 0};
            for (auto q : kCyclicPairs)
              if (c.name == "[w" + std::to_string(q.first) + ",w" + std::to_string(q.second) + "]") p = q;
            auto printed = e.printed_commutators.find(p);
            bool leading = std::any_of(want.begin(), want.end(),
                                       [&](const ExpectedCommutator& x) { return x.pair == p && x.leading_only; });
            if (leading && hbar_bound()) {
              add("invariants", name + " " + c.name, Status::Skipped, c.computed, c.expected, kInvProv,
                  "hbar is bound; the leading hbar term needs a formal hbar");
            } else if (c.ok && leading) {
              add("invariants", name + " " + c.name, Status::Logged, c.computed, c.expected, kInvProv, e.note);
            } else if (c.ok && printed != e.printed_commutators.end()) {
              add("invariants", name + " " + c.name, Status::Logged, c.computed, printed->second.to_string('z'),
                  kInvProv, e.note);
            } else {
              check("invariants", name + " " + c.name, c.ok, c.computed, c.expected, kInvProv);
            }
          }
          std::array<CPoly, 3> v;
          for (std::size_t k = 0; k < 3; ++k) v[k] = commutative_image(gens.w[k]);
          jacobian_witness(name, v);
          if (e.check_surjectivity) surjectivity(name, g, gens);
        });
      }
    }
  }

  void diagram() {
    static constexpr const char* prov = "semiclassical limit of the invariant subalgebra";
    if (c_.invariants.empty()) {
      add("diagram", "invariant entry", Status::Skipped, "no invariant entry", "", prov);
      return;
    }
    if (hbar_bound()) {
      add("diagram", "semiclassical limit", Status::Skipped, "hbar is bound", "formal hbar", prov);
      return;
    }
    for (const auto& e : c_.invariants) {
      std::string name = "row " + std::to_string(e.row) + " (" + e.label + ")";
      guard("diagram", name, [&] {
        GeneratorSet gens = e.gens;
        for (auto& w : gens.w) w = specialize(w, o_.bindings);
        InvariantPresentation pres = compute_presentation(*rs_, gens);
        LimitStructure lim = semiclassical_limit(pres);
        std::array<CPoly, 3> v;
        for (std::size_t k = 0; k < 3; ++k) v[k] = commutative_image(gens.w[k]);
        LimitStructure cl = classical_invariant_bracket(ps_, v, gens.degrees);
        auto r = compare_structures(lim, cl);
        check("diagram", name + " limit vs classical invariants", r.has_value(),
              lim.to_string() + (r ? " via " + r->to_string() : ""), cl.to_string(), prov);
        auto pub = compare_structures(lim, e.published_limit);
        add("diagram", name + " limit vs published row", pub ? (pub->is_identity() ? Status::Pass : Status::Logged) : Status::Mismatch,
            lim.to_string() + (pub ? " via " + pub->to_string() : ""), e.published_limit.to_string(), prov,
            pub && !pub->is_identity() ? "matches after relabeling" + (e.note.empty() ? "" : "; " + e.note) : e.note);
      });
    }
  }

  const CaseDefinition& c_;
  const VerifyOptions& o_;
  Report report_;
  PoissonStructure ps_{CPoly{}, CPoly{}, CPoly{}};
  std::unique_ptr<RewriteSystem> rs_;
  std::vector<std::unique_ptr<RewriteSystem>> point_rs_;
};

}  // namespace

Report run_verification(const CaseDefinition& c, const VerifyOptions& opts) {
  for (const auto& s : opts.sections)
    if (std::find(all_sections().begin(), all_sections().end(), s) == all_sections().end())
      throw Error(ErrorCode::SchemaError, "unknown section " + s);
  return Runner(c, opts).run();
}

Report run_verification(int id, const VerifyOptions& opts) { return run_verification(load_case(id), opts); }

std::vector<Report> verify_all(const VerifyOptions& opts) {
  std::vector<std::future<Report>> jobs;
  // Case 7 is by far the slowest; start it first.
  for (int id : {7, 1, 2, 3, 4, 5, 6, 8, 9})
    jobs.push_back(std::async(std::launch::async, [id, &opts] { return run_verification(id, opts); }));
  std::vector<Report> out;
  for (auto& j : jobs) out.push_back(j.get());
  std::sort(out.begin(), out.end(), [](const Report& a, const Report& b) { return a.case_id < b.case_id; });
  return out;
}

nlohmann::json to_json(const Report& r, bool with_timing) {
  nlohmann::json j;
  j["case"] = r.case_id;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json k = {{"section", c.section}, {"name", c.name},         {"status", to_string(c.status)},
                        {"computed", c.computed}, {"expected", c.expected}, {"provenance", c.provenance}};
    if (!c.note.empty()) k["note"] = c.note;
    j["checks"].push_back(std::move(k));
  }
  j["ok"] = r.ok();
  if (with_timing) {
    std::array<char, 32> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), r.seconds);
    j["seconds"] = std::string(buf.data(), res.ptr);
  }
  return j;
}

nlohmann::json to_json(const std::vector<Report>& rs, bool with_timing) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rs) j.push_back(to_json(r, with_timing));
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  try {
    Report r;
    r.case_id = j.at("case").get<int>();
    for (const auto& k : j.at("checks")) {
      CheckRecord c;
      c.section = k.at("section").get<std::string>();
      c.name = k.at("name").get<std::string>();
      c.status = status_from_string(k.at("status").get<std::string>());
      c.computed = k.at("computed").get<std::string>();
      c.expected = k.at("expected").get<std::string>();
      c.provenance = k.at("provenance").get<std::string>();
      if (k.contains("note")) c.note = k["note"].get<std::string>();
      r.checks.push_back(std::move(c));
    }
    if (j.contains("seconds")) r.seconds = std::stod(j["seconds"].get<std::string>());
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaError, e.what());
  }
}

namespace {

std::string md_cell(std::string s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += "\\|";
    else if (ch == '\n') out += ' ';
    else out += ch;
  }
  return out;
}

}  // namespace

std::string render_markdown(const std::vector<Report>& rs) {
  std::ostringstream os;
  for (const auto& r : rs) {
    os << "## Case " << r.case_id << (r.ok() ? " (pass)" : " (FAIL)") << "\n\n";
    os << "| section | check | status | computed | expected | note |\n|---|---|---|---|---|---|\n";
    for (const auto& c : r.checks)
      os << "| " << c.section << " | " << md_cell(c.name) << " | " << to_string(c.status) << " | "
         << md_cell(c.computed) << " | " << md_cell(c.expected) << " | " << md_cell(c.note) << " |\n";
    os << "\n";
  }
  return os.str();
}

std::string render_text(const std::vector<Report>& rs) {
  std::ostringstream os;
  for (const auto& r : rs) {
    os << "case " << r.case_id << ": " << r.checks.size() << " checks, " << r.count(Status::Pass) << " pass, "
       << r.count(Status::Logged) << " logged, " << r.count(Status::Skipped) << " skipped, "
       << r.count(Status::Fail) + r.count(Status::Mismatch) << " failed\n";
    for (const auto& c : r.checks) {
      if (c.status == Status::Pass) continue;
      os << "  [" << to_string(c.status) << "] " << c.section << ": " << c.name << "\n";
      if (!c.computed.empty()) os << "      computed: " << c.computed << "\n";
      if (!c.expected.empty()) os << "      expected: " << c.expected << "\n";
      if (!c.note.empty()) os << "      note: " << c.note << "\n";
    }
  }
  return os.str();
}

int exit_code(const std::vector<Report>& rs) {
  for (const auto& r : rs)
    if (!r.ok()) return 2;
  return 0;
}

}  // namespace pdq
