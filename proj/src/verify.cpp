#include "thom/verify.hpp"

#include "thom/chern.hpp"
#include "thom/enumerative.hpp"
#include "thom/golden.hpp"
#include "thom/solver.hpp"

namespace thom {

namespace {

CheckResult compare(std::string table, std::string row, std::string method, const GradedPoly& got,
                    const GradedPoly& want) {
  return CheckResult{std::move(table), std::move(row), std::move(method), got == want, got.str(), want.str(), ""};
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

// Names a published Tp of the same pair equal to +-(got - want), if any.
std::string explain_difference(const GradedPoly& got, const GradedPoly& want, const GoldenTp& row) {
  GradedPoly diff = got - want;
  for (const auto& g : golden_tps()) {
    if (g.group == "multi" || g.m != row.m || g.n != row.n || g.type == row.type) continue;
    GradedPoly other = golden_poly(g);
    if (diff == other) return "solved - published = Tp(" + g.type + ")";
    if (diff == -other) return "published - solved = Tp(" + g.type + ")";
  }
  return "difference " + diff.str();
}

// Solved rows compare the solver output; closed-form rows (and published
// quotient forms) must also pass consistency against the lower types.
CheckResult check_tp_row(const GoldenTp& g, const Registry& reg) {
  const SingularityType& t = reg.get(g.type, std::pair{g.m, g.n});
  GradedPoly want = golden_poly(g);
  const bool quotient = g.text.find("cb") != std::string::npos;
  CheckResult r{g.group, g.row, "", false, "", want.str(), ""};
  bool ok = true;
  if (t.solvable) {
    r.method = "solved";
    try {
      GradedPoly got = solve_tp(reg, t).tp;
      r.got = got.str();
      ok = got == want;
      if (!ok) r.detail = explain_difference(got, want, g);
    } catch (const std::exception& e) {
      r.got = "";
      r.detail = e.what();
      ok = false;
    }
  }
  if (!t.solvable || quotient) {
    r.method = r.method.empty() ? "consistency" : r.method + "+consistency";
    ConsistencyReport c = consistency_check(want, default_constraints(reg, t), &t);
    if (!c.ok()) {
      ok = false;
      r.detail += (r.detail.empty() ? "" : "; ") + join(c.violations);
    } else if (!t.solvable) {
      r.got = want.str();
    }
  }
  r.passed = ok;
  return r;
}

std::pair<int, int> pipeline_pair(Pipeline p) {
  if (p == Pipeline::P3Surface) return {2, 2};
  if (p == Pipeline::P4Surface) return {2, 3};
  return {3, 3};
}

// Degree formula of a published row, from the published Tp of its type.
GradedPoly formula_for(const GoldenFormula& g) {
  Pipeline p = parse_pipeline(g.pipeline);
  GradedPoly deg = locus_degree(golden_tp(g.type, pipeline_pair(p)), p);
  if (g.chars == "ordinary") return ordinary_table(deg);
  if (g.chars == "ci") return specialize(deg, complete_intersection_chars());
  return deg;
}

CheckResult check_formula_row(const std::string& table, const GoldenFormula& g) {
  try {
    return compare(table, g.row, "pipeline", formula_for(g), golden_poly(g));
  } catch (const std::exception& e) {
    return CheckResult{table, g.row, "pipeline", false, "", golden_poly(g).str(), e.what()};
  }
}

void formula_rows(std::vector<CheckResult>& out, const std::string& table, const std::string& group) {
  for (const auto& g : golden_formulas())
    if (g.group == group) out.push_back(check_formula_row(table, g));
}

}  // namespace

const std::vector<std::string>& table_ids() {
  static const std::vector<std::string> ids = {"4", "5", "6", "7", "8", "9", "10", "11"};
  return ids;
}

Arbitration arbitrate_a3(const Registry& reg) {
  Arbitration a;
  GradedPoly solved = solve_tp(reg, reg.get("A3", std::pair{3, 3})).tp;
  GradedPoly solved22 = solve_tp(reg, reg.get("Swallowtail", std::pair{2, 2})).tp;
  auto q = to_quotient_form(solved, 3, 3);
  a.solved = q ? q->str() : solved.str();
  for (const auto& g : golden_tps()) {
    if (g.type != "A3" && g.type != "Swallowtail") continue;
    if (g.group == "6") continue;  // caption row repeats Table 4
    bool match = golden_poly(g) == (g.m == 2 ? solved22 : solved);
    // the same text read in the other pair as well
    GoldenTp other = g;
    other.m = other.n = g.m == 2 ? 3 : 2;
    match = match && golden_poly(other) == (other.m == 2 ? solved22 : solved);
    (match ? a.matching : a.rejected).push_back(g.group + ": " + g.text);
  }
  return a;
}

std::vector<CheckResult> verify_table(const std::string& table, const Registry& reg) {
  std::vector<CheckResult> out;
  if (table == "4" || table == "5" || table == "6") {
    for (const auto& g : golden_tps())
      if (g.group == table) out.push_back(check_tp_row(g, reg));
    if (table == "4") {
      Arbitration a = arbitrate_a3(reg);
      out.push_back(CheckResult{"4", "Swallowtail/A_3 arbitration", "identity", a.matching.size() == 1,
                                a.solved, join(a.matching), "rejected: " + join(a.rejected)});
    }
  } else if (table == "7") {
    formula_rows(out, "7", "7");
    auto g = find_golden_formula("goose", "Goose");
    out.push_back(check_formula_row("7", *g));
    GradedPoly crosscap = locus_degree(golden_tp("Sharksfin", std::pair{2, 2}), Pipeline::P3Surface);
    out.push_back(compare("7", "Crosscap = C (two routes)", "identity", crosscap, stable_multisingularity_chars().C));
  } else if (table == "8") {
    formula_rows(out, "8", "8");
    out.push_back(check_formula_row("8", *find_golden_formula("goose", "Goose (ordinary)")));
    OrdinaryFormulas f = stable_multisingularity_chars();
    for (const auto& [name, poly] : std::vector<std::pair<std::string, GradedPoly>>{{"C", f.C}, {"T", f.T}, {"eps0", f.eps0}})
      out.push_back(compare("8", name, "identity", poly, golden_poly(*find_golden_formula("chars", name))));
    CharacterConversion conv = solve_character_conversion();
    for (const auto& [name, poly] :
         std::vector<std::pair<std::string, GradedPoly>>{{"xi1", conv.xi1}, {"xi2", conv.xi2}, {"xi01", conv.xi01}})
      out.push_back(compare("8", name, "identity", poly, golden_poly(*find_golden_formula("conversion", name))));
    out.push_back(CheckResult{"8", "conversion round trip", "identity",
                              conv.round_trip_ordinary && conv.round_trip_surface,
                              conv.round_trip_ordinary && conv.round_trip_surface ? "identity" : "mismatch", "identity",
                              ""});
  } else if (table == "9" || table == "10") {
    formula_rows(out, table, table);
  } else if (table == "11") {
    formula_rows(out, "11", "11");
    formula_rows(out, "11", "primal-extra");
  } else {
    throw UnknownName("unknown table '" + table + "' (expected 4..11 or all)");
  }
  return out;
}

}  // namespace thom
