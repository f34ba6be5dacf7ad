#include <doctest.h>

#include "support.hpp"
#include "thom/errors.hpp"
#include "thom/golden.hpp"
#include "thom/poly_text.hpp"
#include "thom/solver.hpp"

using namespace thom;
using testsupport::elementary;

namespace {

// Tp at a numeric torus point: c_i, c'_j are elementary symmetric functions of
// the evaluated source and target weights.
Rational tp_at(const GradedPoly& tp, const SingularityType& t, const std::vector<Rational>& a) {
  auto value = [&](const Weight& w) {
    Rational s = 0;
    for (std::size_t k = 0; k < w.size(); ++k) s = s + Rational(w[k]) * a[k];
    return s;
  };
  std::vector<Rational> src, tgt;
  for (const auto& w : t.source_weights) src.push_back(value(w));
  for (const auto& w : t.target_weights) tgt.push_back(value(w));
  auto e = elementary(src, t.source_dim), f = elementary(tgt, t.target_dim);
  std::vector<Rational> point;
  for (std::size_t i = 0; i < tp.vars().size(); ++i) {
    const std::string& name = tp.vars()[i].name;
    int k = std::stoi(name.substr(name.rfind('c') == 0 && name[1] == 'p' ? 2 : 1));
    point.push_back(name[1] == 'p' ? f[k] : e[k]);
  }
  return testsupport::evaluate(tp, point);
}

Rational euler_at(const SingularityType& t, const std::vector<Rational>& a) {
  Rational p = 1;
  for (const auto& w : t.normal_weights) {
    Rational s = 0;
    for (std::size_t k = 0; k < w.size(); ++k) s = s + Rational(w[k]) * a[k];
    p = p * s;
  }
  return p;
}

const std::vector<std::pair<const char*, std::pair<int, int>>> kSolvedRows = {
    {"Fold", {2, 2}}, {"Cusp", {2, 2}}, {"Lips/Beaks", {2, 2}}, {"Swallowtail", {2, 2}}, {"Gulls", {2, 2}},
    {"Immersion", {2, 3}}, {"S0", {2, 3}}, {"B1", {2, 3}}, {"S2", {2, 3}}, {"B2", {2, 3}}, {"H2", {2, 3}},
    {"S3", {2, 3}}, {"B3", {2, 3}}, {"H3", {2, 3}}, {"C3", {2, 3}},
    {"A1", {3, 3}}, {"A2", {3, 3}}, {"A3", {3, 3}}, {"A4", {3, 3}}, {"C", {3, 3}}, {"D", {3, 3}},
};

}  // namespace

TEST_CASE("torus data of B1") {
  Registry reg = builtin_registry();
  const auto& b1 = reg.get("B1", std::pair{2, 3});
  TorusBindings tb = torus_substitution(b1, 3);
  auto p = [&](const char* s) { return parse_poly(s, tb.torus); };
  CHECK(tb.bindings.at("c1") == p("2*a"));
  CHECK(tb.bindings.at("c2") == p("a^2"));
  CHECK(tb.bindings.at("cp1") == p("6*a"));
  CHECK(tb.bindings.at("cp2") == p("11*a^2"));
  CHECK(tb.bindings.at("cp3") == p("6*a^3"));
  CHECK(euler_class(b1) == p("2*a^3"));
}

TEST_CASE("worked B1 system") {
  Registry reg = builtin_registry();
  const auto& ex = golden_worked_example();
  auto res = solve_tp(reg, reg.get(ex.type, std::pair{ex.m, ex.n}));
  CHECK(res.report.basis == ex.basis);
  REQUIRE(res.report.equations.size() == 1 + ex.homogeneous.size());
  CHECK(res.report.equations[0].label == "p");
  CHECK(res.report.equations[0].str() == ex.principal);
  for (std::size_t i = 0; i < ex.homogeneous.size(); ++i) {
    CHECK(res.report.equations[i + 1].label == ex.homogeneous[i].first);
    CHECK(res.report.equations[i + 1].str() == ex.homogeneous[i].second);
  }
  CHECK(res.report.equations[1].source == "Immersion");
  CHECK(res.report.equations[7].source == "S0");
  CHECK(res.report.unique);
  CHECK(res.report.verified);
  CHECK(res.tp == parse_poly(ex.tp, chern_table(2, 3)));
}

TEST_CASE("published rows are reproduced") {
  Registry reg = builtin_registry();
  for (const auto& [name, pair] : kSolvedRows) {
    INFO(name);
    auto res = solve_tp(reg, reg.get(name, pair));
    CHECK(res.tp == golden_tp(name, pair));
    CHECK(res.report.integral);
  }
}

TEST_CASE("solved polynomials satisfy the restriction equations numerically") {
  std::mt19937 rng(3);
  Registry reg = builtin_registry();
  for (const auto& [name, pair] : kSolvedRows) {
    const auto& t = reg.get(name, pair);
    GradedPoly tp = solve_tp(reg, t).tp;
    for (int trial = 0; trial < 3; ++trial) {
      auto a = testsupport::random_point(rng, t.torus_rank);
      CHECK(tp_at(tp, t, a) == euler_at(t, a));
      for (const auto* lower : default_constraints(reg, t)) {
        auto b = testsupport::random_point(rng, lower->torus_rank);
        INFO(name << " at " << lower->name);
        CHECK(tp_at(tp, *lower, b) == 0);
      }
    }
  }
}

TEST_CASE("Goose: solved and published forms differ by Tp(Gulls)") {
  Registry reg = builtin_registry();
  auto res = solve_tp(reg, reg.get("Goose", std::pair{2, 2}));
  CHECK(res.report.unique);
  CHECK(res.tp - golden_tp("Goose", std::pair{2, 2}) == golden_tp("Gulls", std::pair{2, 2}));
  // the published form fails the homogeneous rows of Gulls
  auto rep = consistency_check(golden_tp("Goose", std::pair{2, 2}), {&reg.get("Gulls", std::pair{2, 2})});
  CHECK_FALSE(rep.ok());
}

TEST_CASE("closed forms pass consistency") {
  Registry reg = builtin_registry();
  for (auto [name, pair] : std::vector<std::pair<const char*, std::pair<int, int>>>{
           {"Swallowtail", {2, 2}}, {"Butterfly", {2, 2}}, {"Sharksfin", {2, 2}}, {"P3", {2, 3}}, {"H2", {2, 3}},
           {"I22", {3, 3}}}) {
    INFO(name);
    const auto& t = reg.get(name, pair);
    auto rep = consistency_check(golden_tp(name, pair), default_constraints(reg, t), &t);
    CHECK(rep.ok());
    for (const auto& r : rep.residuals) CHECK(r.value.is_zero());
  }
  const auto& bf = reg.get("Butterfly", std::pair{2, 2});
  GradedPoly broken = golden_tp("Butterfly", std::pair{2, 2}) + parse_poly("c1^4", chern_table(2, 2));
  CHECK_FALSE(consistency_check(broken, default_constraints(reg, bf), &bf).ok());
}

TEST_CASE("solver errors") {
  Registry reg = builtin_registry();
  try {
    solve_tp(reg, reg.get("P3", std::pair{2, 3}));
    FAIL("P3 solved");
  } catch (const SolverError& e) {
    CHECK(e.kind == SolverError::Kind::ModulusDirection);
    CHECK(std::string(e.what()).find("modulus direction") != std::string::npos);
  }
  try {
    solve_tp(reg, reg.get("Butterfly", std::pair{2, 2}));
    FAIL("Butterfly solved");
  } catch (const SolverError& e) {
    CHECK(e.kind == SolverError::Kind::NotSolvable);
  }
  // a copy of the target as constraint: its homogeneous rows contradict the principal row
  const auto& fold = reg.get("Fold", std::pair{2, 2});
  SingularityType twin = fold;
  twin.name = "FoldTwin";
  CHECK_THROWS_AS(homogeneous_equations(make_ansatz(fold), fold), UsageError);
  try {
    solve_tp(fold, {&reg.get("Regular", std::pair{2, 2}), &twin});
    FAIL("inconsistent system solved");
  } catch (const SolveFailure& e) {
    CHECK(e.kind == SolverError::Kind::Inconsistent);
    CHECK(e.report.conflict);
  }
}

TEST_CASE("strictly lower constraints leave a kernel") {
  Registry reg = builtin_registry();
  std::vector<std::tuple<const char*, std::pair<int, int>, std::size_t>> cases = {
      {"Swallowtail", {2, 2}, 1}, {"Goose", {2, 2}, 3}, {"Gulls", {2, 2}, 3}, {"A4", {3, 3}, 3},
      {"C", {3, 3}, 3}, {"S3", {2, 3}, 4}, {"C3", {2, 3}, 4}};
  for (const auto& [name, pair, kernel] : cases) {
    const auto& t = reg.get(name, pair);
    std::vector<const SingularityType*> lows;
    for (const auto* s : reg.of_pair(pair.first, pair.second))
      if (s->codim < t.codim) lows.push_back(s);
    try {
      solve_tp(t, lows);
      FAIL(name << " solved");
    } catch (const SolveFailure& e) {
      CHECK(e.kind == SolverError::Kind::Underdetermined);
      CHECK(e.report.kernel_dim == kernel);
    }
  }
}

TEST_CASE("ansatz sizes") {
  Registry reg = builtin_registry();
  CHECK(make_ansatz(reg.get("B1", std::pair{2, 3})).size() == 9);
  CHECK(make_ansatz(reg.get("Goose", std::pair{2, 2})).size() == 14);
  CHECK(make_ansatz(reg.get("S3", std::pair{2, 3})).size() == 25);
  CHECK(make_ansatz(reg.get("D", std::pair{3, 3})).size() == 18);
}
