#include <doctest.h>

#include "support.hpp"
#include "thom/errors.hpp"
#include "thom/graded_poly.hpp"
#include "thom/linear_solve.hpp"
#include "thom/poly_text.hpp"

using namespace thom;
using testsupport::evaluate;

TEST_CASE("rational parsing and arithmetic") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-4") == Rational(-4));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK((Rational(3, 4) * Rational(4, 3)).is_one());
  CHECK(Rational(7, 2).str() == "7/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS(Rational(0).inverse());
  CHECK(binomial(5, 2) == Rational(10));
  CHECK(binomial(2, 5) == Rational(0));
}

TEST_CASE("monomial basis of the (2,3) degree-3 ansatz") {
  auto vars = chern_table(2, 3);
  auto basis = monomial_basis(*vars, 3);
  std::vector<std::string> names;
  for (const auto& e : basis) names.push_back(GradedPoly::monomial(vars, e).str());
  CHECK(names == std::vector<std::string>{"c1^3", "c1*c2", "c1^2*cp1", "c1*cp1^2", "c2*cp1", "cp1^3", "c1*cp2",
                                          "cp1*cp2", "cp3"});
  CHECK(monomial_basis(*vars, 0).size() == 1);
  CHECK(monomial_basis(*vars, -1).empty());
}

TEST_CASE("monomial basis agrees with brute force") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {1, 4}}) {
    auto vars = chern_table(m, n);
    for (int d = 0; d <= 6; ++d) CHECK(monomial_basis(*vars, d) == testsupport::brute_basis(*vars, d));
  }
}

TEST_CASE("weight-0 variables stay out of the basis") {
  auto vars = make_table({{"d", 0}, {"h", 1}, {"c2", 2}});
  for (const auto& e : monomial_basis(*vars, 4)) CHECK(e[0] == 0);
  CHECK(monomial_basis(*vars, 4).size() == 3);
}

TEST_CASE("arithmetic matches numeric evaluation") {
  std::mt19937 rng(11);
  auto vars = chern_table(2, 3);
  for (int i = 0; i < 200; ++i) {
    auto p = testsupport::random_poly(rng, vars, 4), q = testsupport::random_poly(rng, vars, 4);
    auto pt = testsupport::random_point(rng, vars->size());
    CHECK(evaluate(p * q, pt) == evaluate(p, pt) * evaluate(q, pt));
    CHECK(evaluate(p + q, pt) == evaluate(p, pt) + evaluate(q, pt));
    CHECK(evaluate(p - q, pt) == evaluate(p, pt) - evaluate(q, pt));
    CHECK(evaluate(p.pow(3), pt) == evaluate(p, pt) * evaluate(p, pt) * evaluate(p, pt));
  }
}

TEST_CASE("truncation and degree queries") {
  auto vars = chern_table(2, 2);
  auto p = parse_poly("1 + c1 + c2 + c1*cp1 + cp1^3", vars);
  CHECK(p.max_degree() == 3);
  CHECK(p.min_degree() == 0);
  CHECK(p.truncate(1) == parse_poly("1 + c1", vars));
  CHECK(p.part(2) == parse_poly("c2 + c1*cp1", vars));
  CHECK_FALSE(p.is_homogeneous());
  CHECK(p.part(2).is_homogeneous(2));
  CHECK(GradedPoly(vars).is_homogeneous(5));
  CHECK(p.coefficient_in(vars->index("cp1"), 3) == GradedPoly::constant(vars, 1));
}

TEST_CASE("truncated inverse") {
  auto vars = make_table({{"a", 1}, {"d", 0}});
  auto one = GradedPoly::constant(vars, 1);
  auto a = GradedPoly::variable(vars, "a"), d = GradedPoly::variable(vars, "d");
  auto inv = truncated_inverse(one + d * a, 3);
  CHECK(inv == parse_poly("1 - d*a + d^2*a^2 - d^3*a^3", vars));
  CHECK(((one + d * a) * inv).truncate(3) == one);
  CHECK_THROWS_AS(truncated_inverse(a, 2), DomainError);
  CHECK_THROWS_AS(truncated_inverse(one * Rational(2) + a, 2), DomainError);
}

TEST_CASE("substitution") {
  auto vars = chern_table(2, 2);
  auto target = make_table({{"a", 1}});
  auto a = GradedPoly::variable(target, "a");
  Bindings b{{"c1", a * Rational(2)}, {"c2", a * a}, {"cp1", a * Rational(3)}, {"cp2", a * a * Rational(2)}};
  CHECK(substitute(parse_poly("c1^2 - c2 + cp2", vars), b, target) == parse_poly("5*a^2", target));
  CHECK_THROWS_AS(substitute(parse_poly("c1", vars), {}, target), UsageError);
  auto other = extend_table(*vars, {{"h", 1}});
  CHECK(embed(parse_poly("c1 + cp2", vars), other).vars().size() == 5);
}

TEST_CASE("text rendering and parsing") {
  auto vars = chern_table(2, 3);
  auto p = parse_poly("cp3 - 3*c1^3 + 1/2*c1*c2 + c'1^2*c1", vars);
  CHECK(p.str() == "-3*c1^3 + 1/2*c1*c2 + c1*cp1^2 + cp3");
  CHECK(parse_poly(p.str(), vars) == p);
  CHECK(parse_poly("(c1 + cp1)**2 / 2", vars) == parse_poly("1/2*c1^2 + c1*cp1 + 1/2*cp1^2", vars));
  CHECK(parse_poly("0", vars).str() == "0");
  CHECK_THROWS_AS(parse_poly("c4", vars), ParseError);
  CHECK_THROWS_AS(parse_poly("c1 +", vars), ParseError);
  CHECK_THROWS_AS(parse_poly("c1 / c2", vars), ParseError);
  CHECK_THROWS_AS(parse_poly("(c1", vars), ParseError);
}

TEST_CASE("latex rendering") {
  auto vars = make_table({{"c1", 1}, {"cp2", 2}, {"cb3", 3}, {"xi01", 0}});
  CHECK(render_latex(parse_poly("cb3 - 1/2*c1*cp2", vars)) == "-\\frac{1}{2} c_{1} c'_{2} + \\bar{c}_{3}");
  CHECK(latex_variable("xi01") == "\\xi_{01}");
  CHECK(latex_variable("eps0") == "\\epsilon_{0}");
  CHECK(render_latex(parse_poly("c1^2", vars)) == "{c_{1}}^{2}");
}

TEST_CASE("elimination over Q") {
  // unique, inconsistent and underdetermined systems
  std::vector<std::vector<Rational>> A{{1, 1}, {1, -1}, {2, 0}};
  auto el = eliminate(A, std::vector<Rational>{3, 1, 4}, 2, RationalOps{});
  CHECK(el.unique());
  CHECK(el.solution == std::vector<Rational>{2, 1});
  auto bad = eliminate(A, std::vector<Rational>{3, 1, 5}, 2, RationalOps{});
  REQUIRE_FALSE(bad.consistent());
  CHECK(bad.conflict->row == 2);
  auto under = eliminate(std::vector<std::vector<Rational>>{{1, 2, 3}}, std::vector<Rational>{6}, 3, RationalOps{});
  CHECK(under.consistent());
  CHECK(under.free_cols == std::vector<std::size_t>{1, 2});
  CHECK(under.solution == std::vector<Rational>{6, 0, 0});
}

TEST_CASE("elimination recovers random solutions") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 6;
    std::vector<Rational> x = testsupport::random_point(rng, n);
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (std::size_t i = 0; i < n + 2; ++i) {
      auto row = testsupport::random_point(rng, n);
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j) s = s + row[j] * x[j];
      A.push_back(row);
      b.push_back(s);
    }
    auto el = eliminate(A, b, n, RationalOps{});
    REQUIRE(el.consistent());
    if (el.unique()) CHECK(el.solution == x);
    for (std::size_t i = 0; i < A.size(); ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j) s = s + A[i][j] * el.solution[j];
      CHECK(s == b[i]);
    }
  }
}
