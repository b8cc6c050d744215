#include "pdq/registry.hpp"

#include <mutex>

#include "pdq/error.hpp"
#include "pdq/parser.hpp"

namespace pdq {

std::vector<GradedMap> MapFamily::instances() const {
  if (samples.empty()) return {matrix};
  std::vector<GradedMap> out;
  for (const auto& b : samples) out.push_back(specialize(matrix, b));
  return out;
}

CPoly specialize(const CPoly& p, const Bindings& b) {
  return p.map_coeffs([&](const Scalar& c) { return specialize(c, b); });
}

NCPoly specialize(const NCPoly& p, const Bindings& b) {
  return p.map_coeffs([&](const Scalar& c) { return specialize(c, b); });
}

PoissonStructure specialize(const PoissonStructure& ps, const Bindings& b) {
  return PoissonStructure(specialize(ps.bracket(1, 2), b), specialize(ps.bracket(2, 3), b),
                          specialize(ps.bracket(3, 1), b));
}

namespace {

NCPoly Y(const char* s) { return parse_ncpoly(s, 'y'); }
NCPoly Z(const char* s) { return parse_ncpoly(s, 'z'); }
NCPoly Z(const std::string& s) { return parse_ncpoly(s, 'z'); }
GradedMap M(const char* s) { return parse_matrix(s); }
GradedMap M(const std::string& s) { return parse_matrix(s); }

Bindings B(std::initializer_list<std::pair<const char*, const char*>> kv) {
  Bindings b;
  for (const auto& [k, v] : kv) b.emplace(k, parse_scalar(v));
  return b;
}

LimitStructure L(const std::string& b12, const std::string& b23, const std::string& b31, std::array<int, 3> deg) {
  LimitStructure s;
  s.degrees = deg;
  s.brackets[{1, 2}] = parse_cpoly(b12, 'z');
  s.brackets[{2, 3}] = parse_cpoly(b23, 'z');
  s.brackets[{3, 1}] = parse_cpoly(b31, 'z');
  return s;
}

GeneratorSet G(const std::string& w1, const std::string& w2, const std::string& w3, std::array<int, 3> deg) {
  GeneratorSet g;
  g.w = {parse_ncpoly(w1), parse_ncpoly(w2), parse_ncpoly(w3)};
  g.degrees = deg;
  return g;
}

std::vector<ExpectedCommutator> exact(const std::string& c12, const std::string& c23, const std::string& c31) {
  return {ExpectedCommutator{{1, 2}, Z(c12)}, ExpectedCommutator{{2, 3}, Z(c23)},
          ExpectedCommutator{{3, 1}, Z(c31)}};
}

void add_relations(CaseDefinition& c, const char* r21, const char* r32, const char* r31) {
  c.relations.push_back({2, 1, Y(r21), std::nullopt, {}});
  c.relations.push_back({3, 2, Y(r32), std::nullopt, {}});
  c.relations.push_back({3, 1, Y(r31), std::nullopt, {}});
}

void set_omega(CaseDefinition& c, const char* omega) {
  c.omega_text = omega;
  c.omega = parse_cpoly(omega);
  c.poisson = PoissonStructure::from_potential(c.omega);
}

std::vector<GradedMap> pool(std::initializer_list<const char*> ms) {
  std::vector<GradedMap> out;
  for (const char* m : ms) out.push_back(M(m));
  return out;
}

InvariantEntry row1() {
  InvariantEntry e;
  e.row = 1;
  e.label = "Z2 reflection";
  e.group = {M("[-1,0,0; a,1,0; d,0,1]")};
  e.gens = G("y1^2", "a/2*y1 + y2", "d/2*y1 + y3", {2, 1, 1});
  e.commutators = exact("0", "3*hbar*z1", "0");
  e.published_limit = L("0", "3*z1", "0", {2, 1, 1});
  e.samples = {{}, B({{"a", "2"}, {"d", "-1"}}), B({{"a", "1/3"}, {"d", "5"}})};
  return e;
}

InvariantEntry row2(int n) {
  std::string xi = "zeta{" + std::to_string(n) + "}", l = std::to_string(n);
  InvariantEntry e;
  e.row = 2;
  e.label = "Z" + l + " reflection, l = " + l;
  e.group = {M("[1,0,0; 0," + xi + ",0; 0,d,1]")};
  e.gens = G("y1", "d*y2 + (1 - " + xi + ")*y3", "y2^" + l, {1, 1, n});
  e.commutators = exact("(" + xi + " - 1)*hbar*z1^2", "2*" + l + "*(" + xi + " - 1)*hbar*z1*z3", "0");
  e.published_limit = L("(" + xi + " - 1)*z1^2", "2*" + l + "*(" + xi + " - 1)*z1*z3", "0", {1, 1, n});
  e.note = "published limit divides by an unspecified a1; compared with a1 = 1";
  e.samples = {{}, B({{"d", "1"}}), B({{"d", "-2/3"}})};
  return e;
}

InvariantEntry row3(int m, int n, int l) {
  InvariantEntry e;
  e.row = 3;
  e.label = "diagonal reflections, (m,n,l) = (" + std::to_string(m) + "," + std::to_string(n) + "," +
            std::to_string(l) + ")";
  e.group = {diagonal_map(Scalar::zeta(m), 1, 1), diagonal_map(1, Scalar::zeta(n), 1),
             diagonal_map(1, 1, Scalar::zeta(l))};
  e.gens = G("y1^" + std::to_string(m), "y2^" + std::to_string(n), "y3^" + std::to_string(l), {m, n, l});
  auto lead = [](IndexPair p, const char* w, int v) {
    ExpectedCommutator c{p, {}};
    c.leading_only = true;
    c.monomial = w;
    c.leading = Scalar(v);
    return c;
  };
  e.commutators = {lead({1, 2}, "12", 2 * m * n), lead({2, 3}, "23", 2 * n * l), lead({3, 1}, "13", 2 * m * l)};
  e.published_limit = L(std::to_string(2 * m * n) + "*z1*z2", std::to_string(2 * n * l) + "*z2*z3",
                        std::to_string(2 * m * l) + "*z1*z3", {m, n, l});
  e.note = "commutators checked by leading hbar term on the single allowed monomial";
  e.samples = {{}};
  return e;
}

InvariantEntry row4() {
  InvariantEntry e;
  e.row = 4;
  e.label = "Z2 reflection R1 with b = a";
  e.group = {M("[0,-1,0; -1,0,0; a,a,1]")};
  e.gens = G("y1*y2", "-y1 + y2", "a*y1 + y3", {2, 1, 1});
  e.commutators = exact("0", "hbar*(6*z1 + z2^2)", "hbar*z1*z2");
  e.published_limit = L("-2*z1^2 - 12*z3", "-2*z1*z3", "0", {1, 1, 2});
  e.samples = {{}, B({{"a", "1"}}), B({{"a", "-3/2"}})};
  return e;
}

InvariantEntry row5() {
  InvariantEntry e;
  e.row = 5;
  e.label = "Z2 reflection R2";
  e.group = {M("[-1,0,0; 1,1,0; b,0,1]")};
  e.gens = G("y1^2", "b/2*y1 + y3", "1/2*y1 + y2", {2, 1, 1});
  e.commutators = exact("-4*hbar*z1*z3", "hbar*(3/4*z1 - z3^2)", "0");
  e.published_limit = L("z1^2 - 3*z3", "4*z1*z3", "0", {1, 1, 2});
  e.samples = {{}, B({{"b", "2"}}), B({{"b", "-1/3"}})};
  return e;
}

InvariantEntry row6() {
  InvariantEntry e;
  e.row = 6;
  e.label = "Z2 reflection R3";
  e.group = {M("[1,1,0; 0,-1,0; 0,c,1]")};
  e.gens = G("y2^2", "-c*y1 + y3", "2*y1 + y2", {2, 1, 1});
  e.commutators = exact("2*hbar*z1*z3", "hbar*(-3/2*z1 + 1/2*z3^2)", "0");
  e.printed_commutators[{2, 3}] = Z("-3/2*z1 + 1/2*z3^2");
  e.note = "printed [w2,w3] has no hbar factor; the computed value is hbar times it";
  e.published_limit = L("-z1^2 + 3*z3", "-4*z1*z3", "0", {1, 1, 2});
  e.samples = {{}, B({{"c", "1"}}), B({{"c", "4/3"}})};
  return e;
}

InvariantEntry row7() {
  InvariantEntry e;
  e.row = 7;
  e.label = "S3 generated by R1 (parameter a) and R2 (parameter b)";
  e.group = {M("[0,-1,0; -1,0,0; a,a,1]"), M("[-1,0,0; 1,1,0; b,0,1]")};
  e.gens = G("(a + b)/3*y1 + (2*a - b)/3*y2 + y3", "y1^2 + y2^2 + y1*y2",
             "2*y1^3 + 3*y1^2*y2 - 3*y1*y2^2 - 2*y2^3", {1, 2, 3});
  e.commutators = exact("hbar*z3", "0", "-6*hbar*z2^2");
  e.published_limit = L("z3", "0", "-6*z2^2", {1, 2, 3});
  e.samples = {{}, B({{"a", "1"}, {"b", "2"}}), B({{"a", "-1/2"}, {"b", "3"}})};
  return e;
}

InvariantEntry row8() {
  InvariantEntry e;
  e.row = 8;
  e.label = "Z2 reflection";
  e.group = {M("[-1,0,0; 0,1,0; 2,0,1]")};
  e.gens = G("y2", "y1 + y3", "y1^2", {1, 1, 2});
  e.commutators = exact("hbar*(2/(2 + hbar)*z1*z2 + 6/(2 + hbar)*z3)", "8*hbar/(2 + hbar)^2*z2*z3",
                        "8*hbar/(2 - hbar)^2*z1*z3");
  e.published_limit = L("z1*z2 + 3*z3", "2*z2*z3", "2*z1*z3", {1, 1, 2});
  e.samples = {{}};
  e.check_surjectivity = true;
  return e;
}

CaseDefinition case1() {
  CaseDefinition c;
  c.id = 1;
  set_omega(c, "x1^3");
  add_relations(c, "y1*y2", "y2*y3 - 3*hbar*y1^2", "y1*y3");
  // s stands for a square root of bf - ce.
  c.automorphisms.push_back({"[s,0,0; a,b,c; d,e,f], s^2 = bf - ce", M("[s,0,0; a,b,c; d,e,f]"),
                             {B({{"s", "1"}, {"a", "2"}, {"b", "1"}, {"c", "0"}, {"d", "-1"}, {"e", "0"}, {"f", "1"}}),
                              B({{"s", "-3"}, {"a", "0"}, {"b", "2"}, {"c", "1"}, {"d", "1/2"}, {"e", "1"}, {"f", "5"}}),
                              B({{"s", "2"}, {"a", "-1"}, {"b", "3"}, {"c", "1"}, {"d", "3"}, {"e", "-1"}, {"f", "1"}})}});
  c.non_automorphisms = pool({"[1,1,0; 0,1,0; 0,0,1]", "[0,1,0; 0,0,1; 1,0,0]", "[2,0,0; 0,1,0; 0,0,1]",
                              "[1,0,1; 0,1,0; 0,0,1]", "[1,2,3; 0,1,4; 0,0,1]"});
  c.reflections.push_back({"[-1,0,0; a,1,0; d,0,1]", M("[-1,0,0; a,1,0; d,0,1]"),
                           {B({{"a", "0"}, {"d", "0"}}), B({{"a", "1"}, {"d", "2"}}), B({{"a", "-1/2"}, {"d", "3"}})}});
  c.trace_oracles.push_back({"diag(-1,1,1), 1/((1+t)(1-t)^2)", diagonal_map(-1, 1, 1), {1, -1, -1, 1}});
  c.invariants.push_back(row1());
  return c;
}

CaseDefinition case2() {
  CaseDefinition c;
  c.id = 2;
  set_omega(c, "x1^2*x2");
  add_relations(c, "y1*y2", "y2*y3 - 2*hbar*y1*y2", "y1*y3 + hbar*y1^2");
  c.automorphisms.push_back({"[a,0,0; 0,b,0; c,d,a]", M("[a,0,0; 0,b,0; c,d,a]"),
                             {B({{"a", "2"}, {"b", "3"}, {"c", "1"}, {"d", "5"}}),
                              B({{"a", "-1"}, {"b", "1/2"}, {"c", "0"}, {"d", "2"}}),
                              B({{"a", "1/3"}, {"b", "-2"}, {"c", "4"}, {"d", "-1"}})}});
  c.non_automorphisms = pool({"[1,1,0; 0,1,0; 0,0,1]", "[1,0,0; 0,1,1; 0,0,1]", "[0,1,0; 0,0,1; 1,0,0]",
                              "[2,0,0; 0,1,0; 0,0,1]", "[1,0,1; 0,1,0; 0,0,1]"});
  c.reflections.push_back({"[1,0,0; 0,xi,0; 0,d,1]", M("[1,0,0; 0,xi,0; 0,d,1]"),
                           {B({{"xi", "-1"}, {"d", "0"}}), B({{"xi", "zeta{3}"}, {"d", "1"}}),
                            B({{"xi", "zeta{4}"}, {"d", "-2"}})}});
  for (int n : {2, 3, 4}) c.invariants.push_back(row2(n));
  return c;
}

CaseDefinition case3() {
  CaseDefinition c;
  c.id = 3;
  set_omega(c, "2*x1*x2*x3");
  add_relations(c, "(1 - hbar)/(1 + hbar)*y1*y2", "(1 - hbar)/(1 + hbar)*y2*y3", "(1 + hbar)/(1 - hbar)*y1*y3");
  std::vector<Bindings> abc = {B({{"a", "1"}, {"b", "1"}, {"c", "1"}}), B({{"a", "2"}, {"b", "-1"}, {"c", "1/3"}}),
                               B({{"a", "-3"}, {"b", "5"}, {"c", "1/2"}})};
  for (const char* m : {"[a,0,0; 0,b,0; 0,0,c]", "[0,a,0; 0,0,b; c,0,0]", "[0,0,a; b,0,0; 0,c,0]"})
    c.automorphisms.push_back({m, M(m), abc});
  c.non_automorphisms = pool({"[1,1,0; 0,1,0; 0,0,1]", "[1,0,0; 0,1,1; 0,0,1]", "[1,0,1; 0,1,0; 0,0,1]",
                              "[1,2,3; 0,1,4; 0,0,1]", "[2,1,0; 1,1,0; 0,0,1]"});
  std::vector<Bindings> xi = {B({{"xi", "-1"}}), B({{"xi", "zeta{3}"}}), B({{"xi", "zeta{4}"}})};
  for (const char* m : {"[1,0,0; 0,1,0; 0,0,xi]", "[1,0,0; 0,xi,0; 0,0,1]", "[xi,0,0; 0,1,0; 0,0,1]"})
    c.reflections.push_back({m, M(m), xi});
  c.trace_oracles.push_back({"cyclic map a = b = c = 1, 1/(1-t^3)", M("[0,1,0; 0,0,1; 1,0,0]"), {1, 0, 0, -1}});
  c.invariants.push_back(row3(2, 3, 1));
  c.invariants.push_back(row3(1, 2, 3));
  c.invariants.push_back(row3(3, 3, 2));
  return c;
}

CaseDefinition case4() {
  CaseDefinition c;
  c.id = 4;
  set_omega(c, "x1^2*x2 + x1*x2^2");
  add_relations(c, "y1*y2", "y2*y3 - 2*hbar*y1*y2 - hbar*y2^2", "y1*y3 + hbar*y1^2 + 2*hbar*y1*y2");
  std::vector<Bindings> abc = {B({{"a", "1"}, {"b", "0"}, {"c", "0"}}), B({{"a", "2"}, {"b", "1"}, {"c", "-1"}}),
                               B({{"a", "-1/2"}, {"b", "3"}, {"c", "1/3"}})};
  for (const char* m : {"[0,a,0; -a,-a,0; b,c,a]", "[0,-a,0; -a,0,0; b,c,a]", "[-a,0,0; a,a,0; b,c,a]",
                        "[-a,-a,0; a,0,0; b,c,a]", "[a,a,0; 0,-a,0; b,c,a]", "[a,0,0; 0,a,0; b,c,a]"})
    c.automorphisms.push_back({m, M(m), abc});
  c.non_automorphisms = pool({"[1,1,0; 0,1,0; 0,0,1]", "[1,0,0; 0,1,1; 0,0,1]", "[0,1,0; 0,0,1; 1,0,0]",
                              "[2,0,0; 0,1,0; 0,0,1]", "[1,0,1; 0,1,0; 0,0,1]"});
  std::vector<Bindings> b = {B({{"b", "0"}}), B({{"b", "1"}}), B({{"b", "-2"}})};
  c.reflections.push_back({"R1 = [0,-1,0; -1,0,0; b,b,1]", M("[0,-1,0; -1,0,0; b,b,1]"), b});
  c.reflections.push_back({"R2 = [-1,0,0; 1,1,0; b,0,1]", M("[-1,0,0; 1,1,0; b,0,1]"), b});
  c.reflections.push_back({"R3 = [1,1,0; 0,-1,0; 0,c,1]", M("[1,1,0; 0,-1,0; 0,c,1]"),
                           {B({{"c", "0"}}), B({{"c", "1"}}), B({{"c", "-2"}})}});
  c.invariants.push_back(row4());
  c.invariants.push_back(row5());
  c.invariants.push_back(row6());
  c.invariants.push_back(row7());
  return c;
}

std::vector<Bindings> scalar_samples() { return {B({{"a", "2"}}), B({{"a", "-1"}}), B({{"a", "zeta{3}"}})}; }

CaseDefinition case5() {
  CaseDefinition c;
  c.id = 5;
  set_omega(c, "x1^3 + x2^2*x3");
  add_relations(c, "y1*y2 - hbar*y2^2", "y2*y3 - 3*hbar*y1^2", "y1*y3 + 2*hbar*y2*y3 - 3*hbar^2*y1^2");
  c.automorphisms.push_back({"aI", M("[a,0,0; 0,a,0; 0,0,a]"), scalar_samples()});
  c.non_automorphisms = pool({"[1,1,0; 0,1,0; 0,0,1]", "[1,0,0; 0,1,1; 0,0,1]", "[0,1,0; 0,0,1; 1,0,0]",
                              "[2,0,0; 0,1,0; 0,0,1]", "[1,0,1; 0,1,0; 0,0,1]"});
  return c;
}

CaseDefinition case6() {
  CaseDefinition c;
  c.id = 6;
  set_omega(c, "x1^3 + x1^2*x3 + x2^2*x3");
  add_relations(c, "y1*y2 - hbar*y1^2 - hbar*y2^2",
                "-2*hbar/(1 + hbar^2)*y1*y3 + (1 - hbar^2)/(1 + hbar^2)*y2*y3 - 3*hbar/(1 + hbar^2)*y1^2",
                "(1 - hbar^2)/(1 + hbar^2)*y1*y3 + 2*hbar/(1 + hbar^2)*y2*y3 - 3*hbar^2/(1 + hbar^2)*y1^2");
  c.automorphisms.push_back({"aI", M("[a,0,0; 0,a,0; 0,0,a]"), scalar_samples()});
  std::vector<Bindings> a = {B({{"a", "1"}}), B({{"a", "-1"}}), B({{"a", "2"}})};
  c.automorphisms.push_back({"order-3 rotation, upper signs",
                             M("[-1/2*a, sqrt3/2*a, 0; -sqrt3/2*a, -1/2*a, 0; 9/8*a, -3*sqrt3/8*a, a]"), a});
  c.automorphisms.push_back({"order-3 rotation, lower signs",
                             M("[-1/2*a, -sqrt3/2*a, 0; sqrt3/2*a, -1/2*a, 0; 9/8*a, 3*sqrt3/8*a, a]"), a});
  c.non_automorphisms = pool({"[1,1,0; 0,1,0; 0,0,1]", "[1,0,0; 0,1,1; 0,0,1]", "[0,1,0; 0,0,1; 1,0,0]",
                              "[2,0,0; 0,1,0; 0,0,1]", "[1,0,1; 0,1,0; 0,0,1]"});
  c.order_witness = M("[-1/2, sqrt3/2, 0; -sqrt3/2, -1/2, 0; 9/8, -3*sqrt3/8, 1]");
  return c;
}

CaseDefinition case7() {
  CaseDefinition c;
  c.id = 7;
  set_omega(c, "1/3*(x1^3 + x2^3 + x3^3) + lambda*x1*x2*x3");
  add_relations(c, "(2 - lambda*hbar)/(2 + lambda*hbar)*y1*y2 - 2*hbar/(2 + lambda*hbar)*y3^2",
                "(2 - lambda*hbar)/(2 + lambda*hbar)*y2*y3 - 2*hbar/(2 + lambda*hbar)*y1^2",
                "(2 + lambda*hbar)/(2 - lambda*hbar)*y1*y3 + 2*hbar/(2 - lambda*hbar)*y2^2");
  c.relations[2].printed = Y("(2 + lambda*hbar)/(2 - lambda*hbar)*y1*y3 + hbar/(2 - lambda*hbar)*y2^2");
  c.relations[2].note =
      "printed y2^2 coefficient is hbar/(2 - lambda*hbar); the cyclic symmetry x1 -> x2 -> x3 -> x1 of the "
      "superpotential carries the other two rules to 2*hbar/(2 - lambda*hbar)";
  c.automorphisms.push_back({"aI", M("[a,0,0; 0,a,0; 0,0,a]"), scalar_samples()});
  c.automorphisms.push_back({"diag(1, b, b^2)", M("[1,0,0; 0,b,0; 0,0,b^2]"),
                             {B({{"b", "zeta{3}"}}), B({{"b", "zeta{3}^2"}})}});
  c.automorphisms.push_back({"cyclic permutation", M("[0,1,0; 0,0,1; 1,0,0]"), {}});
  c.non_automorphisms = pool({"[1,1,0; 0,1,0; 0,0,1]", "[1,0,0; 0,1,1; 0,0,1]", "[2,0,0; 0,1,0; 0,0,1]",
                              "[1,0,1; 0,1,0; 0,0,1]", "[1,2,3; 0,1,4; 0,0,1]"});
  c.trace_points = {B({{"hbar", "1/3"}, {"lambda", "2"}}), B({{"hbar", "2/5"}, {"lambda", "-1/2"}})};
  c.symbolic_trace_degree = 5;
  return c;
}

CaseDefinition case8() {
  CaseDefinition c;
  c.id = 8;
  set_omega(c, "x1^3 + x1^2*x2 + x1*x2*x3");
  add_relations(c, "(2 - hbar)/(2 + hbar)*y1*y2",
                "(2 - hbar)/(2 + hbar)*y2*y3 - 6*hbar/(2 + hbar)*y1^2 - 8*hbar/(2 + hbar)^2*y1*y2",
                "(2 + hbar)/(2 - hbar)*y1*y3 + 2*hbar/(2 - hbar)*y1^2");
  c.automorphisms.push_back({"[a,0,0; 0,a^2/b,0; b-a,0,b]", M("[a,0,0; 0,a^2/b,0; b-a,0,b]"),
                             {B({{"a", "1"}, {"b", "2"}}), B({{"a", "-1"}, {"b", "1"}}),
                              B({{"a", "2"}, {"b", "-1/2"}})}});
  c.non_automorphisms = pool({"[1,1,0; 0,1,0; 0,0,1]", "[1,0,0; 0,1,1; 0,0,1]", "[0,1,0; 0,0,1; 1,0,0]",
                              "[2,0,0; 0,1,0; 0,0,1]", "[1,0,1; 0,1,0; 0,0,1]"});
  c.reflections.push_back({"[-1,0,0; 0,1,0; 2,0,1]", M("[-1,0,0; 0,1,0; 2,0,1]"), {}});
  c.invariants.push_back(row8());
  return c;
}

CaseDefinition case9() {
  CaseDefinition c;
  c.id = 9;
  set_omega(c, "x1^2*x3 + x1*x2^2");
  add_relations(c, "y1*y2 - hbar*y1^2", "-2*hbar*y1*y3 + y2*y3 + hbar^3*y1^2 - 2*hbar^2*y1*y2 - hbar*y2^2",
                "y1*y3 - hbar^2*y1^2 + 2*hbar*y1*y2");
  c.automorphisms.push_back({"[a,0,0; b,a,0; -b^2/a,-2b,a]", M("[a,0,0; b,a,0; -b^2/a,-2*b,a]"),
                             {B({{"a", "1"}, {"b", "1"}}), B({{"a", "2"}, {"b", "-1"}}),
                              B({{"a", "-1/2"}, {"b", "3"}})},
                             M("[a,0,0; b,a,0; -b^2/a,-b,a]"),
                             "printed (3,2) entry is -b; compatibility of {x3,x1} = 2x1x2 forces -2b"});
  c.non_automorphisms = pool({"[1,1,0; 0,1,0; 0,0,1]", "[1,0,0; 0,1,1; 0,0,1]", "[0,1,0; 0,0,1; 1,0,0]",
                              "[2,0,0; 0,1,0; 0,0,1]", "[1,0,1; 0,1,0; 0,0,1]"});
  return c;
}

}  // namespace

const CaseDefinition& load_case(int id) {
  static std::once_flag once;
  static std::vector<CaseDefinition> cases;
  std::call_once(once, [] {
    cases = {case1(), case2(), case3(), case4(), case5(), case6(), case7(), case8(), case9()};
  });
  if (id < 1 || id > 9) throw Error(ErrorCode::UnknownCase, "case " + std::to_string(id));
  return cases[static_cast<std::size_t>(id - 1)];
}

namespace {

const std::string& require_string(const nlohmann::json& v, const char* what) {
  if (!v.is_string()) throw Error(ErrorCode::SchemaError, std::string(what) + " must be a string");
  return v.get_ref<const std::string&>();
}

int require_index(const nlohmann::json& v, const char* what) {
  if (!v.is_number_integer() || v.get<int>() < 1 || v.get<int>() > 3)
    throw Error(ErrorCode::SchemaError, std::string(what) + " must be an integer in 1..3");
  return v.get<int>();
}

std::vector<GradedMap> matrix_list(const nlohmann::json& v, const char* what) {
  if (!v.is_array()) throw Error(ErrorCode::SchemaError, std::string(what) + " must be a list of matrices");
  std::vector<GradedMap> out;
  for (const auto& m : v) out.push_back(parse_matrix(require_string(m, what)));
  return out;
}

}  // namespace

CaseDefinition ingest_custom_case(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::SchemaError, "case document must be an object");
  bool has_omega = doc.contains("omega"), has_brackets = doc.contains("brackets");
  if (has_omega == has_brackets) throw Error(ErrorCode::SchemaError, "exactly one of omega or brackets is required");
  for (const auto& [key, value] : doc.items())
    if (key != "omega" && key != "brackets" && key != "generators" && key != "groups" && key != "id")
      throw Error(ErrorCode::SchemaError, "unknown field " + key);

  CaseDefinition c;
  c.id = doc.contains("id") ? doc["id"].get<int>() : 0;
  if (has_omega) {
    c.omega_text = require_string(doc["omega"], "omega");
    c.omega = parse_cpoly(c.omega_text);
    c.poisson = PoissonStructure::from_potential(c.omega);
  } else {
    const auto& br = doc["brackets"];
    if (!br.is_array() || br.empty()) throw Error(ErrorCode::SchemaError, "brackets must be a non-empty list");
    StructureConstants sc;
    for (const auto& entry : br) {
      if (!entry.is_object() || !entry.contains("pair") || !entry.contains("terms"))
        throw Error(ErrorCode::SchemaError, "bracket entries need pair and terms");
      const auto& pair = entry["pair"];
      if (!pair.is_array() || pair.size() != 2) throw Error(ErrorCode::SchemaError, "pair must be [i, j]");
      int i = require_index(pair[0], "pair"), j = require_index(pair[1], "pair");
      if (i >= j) throw Error(ErrorCode::SchemaError, "pair must satisfy i < j");
      auto& row = sc[{i, j}];
      for (const auto& t : entry["terms"]) {
        if (!t.is_object() || !t.contains("mono") || !t.contains("coeff") || !t["mono"].is_array() ||
            t["mono"].size() != 2)
          throw Error(ErrorCode::SchemaError, "terms need mono [k, l] and coeff");
        int k = require_index(t["mono"][0], "mono"), l = require_index(t["mono"][1], "mono");
        if (k > l) std::swap(k, l);
        row[{k, l}] += parse_scalar(require_string(t["coeff"], "coeff"));
      }
    }
    c.poisson = PoissonStructure::from_constants(sc);
  }
  if (!jacobi_check(c.poisson)) throw Error(ErrorCode::JacobiFailure, "brackets violate the Jacobi identity");
  auto rs = RewriteSystem::derive(structure_constants(c.poisson));
  c.relations.push_back({2, 1, rs.rule(2, 1), std::nullopt, {}});
  c.relations.push_back({3, 2, rs.rule(3, 2), std::nullopt, {}});
  c.relations.push_back({3, 1, rs.rule(3, 1), std::nullopt, {}});
  if (doc.contains("generators"))
    for (const auto& m : matrix_list(doc["generators"], "generators")) c.automorphisms.push_back({to_string(m), m, {}});
  if (doc.contains("groups")) {
    if (!doc["groups"].is_array()) throw Error(ErrorCode::SchemaError, "groups must be a list");
    for (const auto& g : doc["groups"]) c.groups.push_back(matrix_list(g, "groups"));
  }
  return c;
}

}  // namespace pdq
