// Acceptance criteria 1-7, one PASS/FAIL line each; details of failures
// follow on indented lines. Exit status is nonzero if any criterion fails.

#include <functional>
#include <iostream>
#include <random>

#include "support.hpp"
#include "thom/chern.hpp"
#include "thom/enumerative.hpp"
#include "thom/golden.hpp"
#include "thom/poly_text.hpp"
#include "thom/quotient_ring.hpp"
#include "thom/solver.hpp"
#include "thom/verify.hpp"

using namespace thom;

namespace {

struct Criterion {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void equal(const GradedPoly& got, const GradedPoly& want, const std::string& what) {
    if (!(got == want)) failures.push_back(what + "\n      got:  " + got.str() + "\n      want: " + want.str());
  }
};

using Pair = std::pair<int, int>;

GradedPoly published_formula(const std::string& group, const std::string& row) {
  auto g = find_golden_formula(group, row);
  if (!g) throw UsageError("missing published row " + group + "/" + row);
  return golden_poly(*g);
}

Pair pipeline_pair(Pipeline p) {
  return p == Pipeline::P3Surface ? Pair{2, 2} : p == Pipeline::P4Surface ? Pair{2, 3} : Pair{3, 3};
}

GradedPoly degree_row(const GoldenFormula& g) {
  Pipeline p = parse_pipeline(g.pipeline);
  GradedPoly f = locus_degree(golden_tp(g.type, pipeline_pair(p)), p);
  if (g.chars == "ordinary") return ordinary_table(f);
  if (g.chars == "ci") return specialize(f, complete_intersection_chars());
  return f;
}

void formula_group(Criterion& c, const std::string& group, const std::string& label) {
  std::size_t n = 0;
  for (const auto& g : golden_formulas())
    if (g.group == group) {
      ++n;
      c.equal(degree_row(g), golden_poly(g), label + " " + g.row);
    }
  c.expect(n > 0, label + ": no rows");
}

void worked_example(Criterion& c, const Registry& reg) {
  const auto& ex = golden_worked_example();
  auto res = solve_tp(reg, reg.get(ex.type, Pair{ex.m, ex.n}));
  c.expect(res.report.basis == ex.basis, "ansatz monomials differ");
  c.expect(res.report.basis.size() == 9, "ansatz does not have 9 monomials");
  const auto& eqs = res.report.equations;
  c.expect(eqs.size() == 11, "expected 1 principal and 10 homogeneous equations, got " + std::to_string(eqs.size()));
  if (!eqs.empty()) c.expect(eqs[0].label == "p" && eqs[0].str() == ex.principal, "principal: " + eqs[0].str());
  for (std::size_t i = 0; i < ex.homogeneous.size() && i + 1 < eqs.size(); ++i)
    c.expect(eqs[i + 1].label == ex.homogeneous[i].first && eqs[i + 1].str() == ex.homogeneous[i].second,
             ex.homogeneous[i].first + ": " + eqs[i + 1].label + " " + eqs[i + 1].str());
  c.equal(res.tp, parse_poly(ex.tp, chern_table(ex.m, ex.n)), "Tp(B1)");
}

void solver_tables(Criterion& c, const Registry& reg) {
  const std::vector<std::pair<const char*, Pair>> solved = {
      {"Fold", {2, 2}}, {"Cusp", {2, 2}}, {"Lips/Beaks", {2, 2}}, {"Goose", {2, 2}}, {"Gulls", {2, 2}},
      {"S0", {2, 3}}, {"B1", {2, 3}}, {"S2", {2, 3}}, {"B2", {2, 3}}, {"H2", {2, 3}}, {"S3", {2, 3}},
      {"B3", {2, 3}}, {"H3", {2, 3}}, {"C3", {2, 3}}, {"C", {3, 3}}, {"D", {3, 3}},
      {"A1", {3, 3}}, {"A2", {3, 3}}, {"A3", {3, 3}}, {"A4", {3, 3}}};
  for (const auto& [name, pair] : solved) {
    try {
      GradedPoly got = solve_tp(reg, reg.get(name, pair)).tp, want = golden_tp(name, pair);
      c.equal(got, want, std::string("solved ") + name);
      if (!(got == want) && got - want == golden_tp("Gulls", pair))
        c.notes.push_back(std::string(name) + ": solved - published = Tp(Gulls); the published form fails the Gulls rows");
    } catch (const std::exception& e) {
      c.expect(false, std::string("solve ") + name + ": " + e.what());
    }
  }
  const std::vector<std::pair<const char*, Pair>> closed = {
      {"Swallowtail", {2, 2}}, {"Butterfly", {2, 2}}, {"Sharksfin", {2, 2}},
      {"P3", {2, 3}}, {"I22", {3, 3}}, {"H2", {2, 3}}};
  for (const auto& [name, pair] : closed) {
    const auto& t = reg.get(name, pair);
    auto rep = consistency_check(golden_tp(name, pair), default_constraints(reg, t), &t);
    bool zero = true;
    for (const auto& r : rep.residuals) zero = zero && r.value.is_zero();
    c.expect(rep.ok() && zero, std::string("closed form ") + name + " has nonzero residuals");
  }
}

void arbitration(Criterion& c, const Registry& reg) {
  Arbitration a = arbitrate_a3(reg);
  c.expect(a.matching.size() == 1, "expected exactly one matching published form, got " +
                                        std::to_string(a.matching.size()));
  if (a.matching.size() == 1)
    c.expect(a.matching[0].rfind("4:", 0) == 0, "matching form is not the Table 4 entry: " + a.matching[0]);
  std::string note = "A3 solved as " + a.solved + "; rejected";
  for (const auto& r : a.rejected) note += " [" + r + "]";
  c.notes.push_back(note);
}

void enumerative_p3(Criterion& c) {
  formula_group(c, "7", "Table 7");
  c.equal(degree_row(*find_golden_formula("goose", "Goose")), published_formula("goose", "Goose"), "Goose degree");
  formula_group(c, "8", "Table 8");
  OrdinaryFormulas f = stable_multisingularity_chars();
  c.equal(f.C, published_formula("chars", "C"), "C");
  c.equal(f.T, published_formula("chars", "T"), "T");
  c.equal(f.eps0, published_formula("chars", "eps0"), "eps0");
  CharacterConversion conv = solve_character_conversion();
  c.equal(conv.xi1, published_formula("conversion", "xi1"), "xi1 from elimination");
  c.equal(conv.xi2, published_formula("conversion", "xi2"), "xi2 from elimination");
  c.equal(conv.xi01, published_formula("conversion", "xi01"), "xi01 from elimination");
  c.expect(conv.round_trip_ordinary, "xi -> (eps0, C, T) -> xi is not the identity");
  c.expect(conv.round_trip_surface, "(eps0, C, T) -> xi -> (eps0, C, T) is not the identity");
  // forward direction with the published conversion
  Bindings fwd{{"xi1", published_formula("conversion", "xi1")},
               {"xi2", published_formula("conversion", "xi2")},
               {"xi01", published_formula("conversion", "xi01")}};
  auto ord = char_table("ordinary");
  c.equal(substitute(f.eps0, fwd, ord), GradedPoly::variable(ord, "eps0"), "published conversion, eps0");
  c.equal(substitute(f.C, fwd, ord), GradedPoly::variable(ord, "C"), "published conversion, C");
  c.equal(substitute(f.T, fwd, ord), GradedPoly::variable(ord, "T"), "published conversion, T");
}

void enumerative_p4(Criterion& c) {
  formula_group(c, "9", "Table 9");
  formula_group(c, "10", "Table 10");
  formula_group(c, "11", "Table 11");
  GradedPoly a3 = locus_degree(golden_tp("A3", Pair{3, 3}), Pipeline::P4Primal);
  c.equal(a3, parse_poly("6*d", char_table("primal")), "A3 primal degree");
  GradedPoly i22 = locus_degree(golden_tp("I22", Pair{3, 3}), Pipeline::P4Primal);
  c.expect(i22.is_zero(), "I22 primal degree is " + i22.str());
}

void cross_route(Criterion& c) {
  GradedPoly flag_route = locus_degree(golden_tp("Sharksfin", Pair{2, 2}), Pipeline::P3Surface);
  GradedPoly multi_route = stable_multisingularity_chars().C;
  c.equal(flag_route, multi_route, "Crosscap via the flag ring vs C via multi-singularities");
  c.equal(flag_route, published_formula("7", "Crosscap"), "Crosscap row");
}

void properties(Criterion& c, const Registry& reg) {
  std::mt19937 rng(2024);
  const int cases = 1000;
  auto vars = chern_table(2, 3);
  int bad = 0;
  for (int i = 0; i < cases; ++i) {
    auto p = testsupport::random_poly(rng, vars, 6), q = testsupport::random_poly(rng, vars, 6),
         r = testsupport::random_poly(rng, vars, 6);
    if (!((p * q) * r == p * (q * r)) || !(p * (q + r) == p * q + p * r) || !(p + q == q + p) || !(p * q == q * p))
      ++bad;
  }
  c.expect(bad == 0, "ring axioms failed in " + std::to_string(bad) + " cases");

  std::vector<QuotientRing> rings = {projective_flag_ring(3), projective_flag_ring(4)};
  bad = 0;
  for (int i = 0; i < cases; ++i) {
    const auto& R = rings[i % 2];
    auto x = R.reduce(testsupport::random_poly(rng, R.table(), 6));
    if (!(R.reduce(x) == x)) ++bad;
  }
  c.expect(bad == 0, "reduce not idempotent in " + std::to_string(bad) + " cases");

  for (int n : {3, 4}) {
    QuotientRing R = projective_flag_ring(n);
    auto t = R.var("t");
    c.equal(gysin_pushforward(t.pow(n - 1), R), R.one(), "pi_*(t^" + std::to_string(n - 1) + ") on P^" + std::to_string(n));
    c.equal(gysin_pushforward(t.pow(n), R), -R.var("a"), "pi_*(t^" + std::to_string(n) + ") on P^" + std::to_string(n));
  }

  bad = 0;
  for (int m = 1; m <= 3; ++m)
    for (int n = m; n <= m + 2; ++n) {
      auto ch = chern_table(m, n);
      auto cv = ChernVector::formal(ch, "c", m), cp = ChernVector::formal(ch, "cp", n);
      Bindings same;
      for (int j = 1; j <= n; ++j) same.emplace("cp" + std::to_string(j), j <= m ? cv[j] : GradedPoly(ch));
      for (const auto& cb : quotient_chern(cv, cp, 6))
        if (!substitute(cb, same, ch).is_zero()) ++bad;
    }
  c.expect(bad == 0, "quotient Chern classes nonzero at c' = c");

  bad = 0;
  for (auto [m, n] : std::vector<Pair>{{1, 1}, {2, 2}, {2, 3}, {3, 3}, {3, 4}})
    for (int d = 0; d <= 6; ++d)
      if (monomial_basis(*chern_table(m, n), d) != testsupport::brute_basis(*chern_table(m, n), d)) ++bad;
  c.expect(bad == 0, "monomial basis differs from brute force");

  for (const auto& t : reg.types()) {
    if (!t.solvable) continue;
    try {
      auto res = solve_tp(reg, t);
      c.expect(res.report.integral && res.tp.integral_coefficients(), "non-integral Tp " + t.name);
    } catch (const std::exception& e) {
      c.expect(false, "solve " + t.name + ": " + e.what());
    }
  }
  // final degree formulas; the character displays carry declared denominators
  for (const auto& g : golden_formulas()) {
    if (g.pipeline.empty()) continue;
    c.expect(degree_row(g).integral_coefficients(), "non-integral degree formula " + g.group + "/" + g.row);
  }
  OrdinaryFormulas f = stable_multisingularity_chars();
  c.expect((f.eps0 * Rational(2)).integral_coefficients(), "2*eps0 not integral");
  c.expect((f.T * Rational(6)).integral_coefficients(), "6*T not integral");
  c.expect((f.T * Rational(3)).integral_coefficients() == false, "T needs the full factor 6");
  c.expect(f.C.integral_coefficients(), "C not integral");
}

}  // namespace

int main() {
  Registry reg = builtin_registry();
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"worked B1 system: ansatz, principal and homogeneous equations, Tp", [&](Criterion& c) { worked_example(c, reg); }},
      {"Tables 4-6: solvable rows reproduced, closed forms consistent", [&](Criterion& c) { solver_tables(c, reg); }},
      {"Swallowtail/A3 published forms arbitrated", [&](Criterion& c) { arbitration(c, reg); }},
      {"surfaces in P^3: Tables 7 and 8, Goose degree, C/T/eps0, character conversion", enumerative_p3},
      {"P^4: Tables 9, 10, 11, A3 = 6d, I22 = 0", enumerative_p4},
      {"Crosscap row equals the C display by two routes", cross_route},
      {"property suites and integrality", [&](Criterion& c) { properties(c, reg); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    bool ok = c.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << "\n";
    for (const auto& f : c.failures) std::cout << "      " << f << "\n";
    for (const auto& n : c.notes) std::cout << "      note: " << n << "\n";
  }
  return failed ? 1 : 0;
}
