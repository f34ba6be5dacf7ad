#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thom/graded_poly.hpp"

namespace thom {

// One published Thom polynomial. `group` is "4", "5", "6" for the Tp tables,
// "stable" for the listing of stable-germ classes, "multi" for multi-singularity
// classes in s0, s1, cb.
struct GoldenTp {
  std::string group;
  std::string row;   // label as printed
  std::string type;  // registry name
  int m = 0, n = 0;
  std::string text;
};

// One published degree formula. `chars` names the character table:
// "surface" (d, xi1, xi2, xi01), "ordinary" (d, eps0, C, T),
// "ci" (d1, d2), "primal" (d).
struct GoldenFormula {
  std::string group;
  std::string row;
  std::string type;      // registry name, empty for character identities
  std::string pipeline;  // p3-surface, p4-surface, p4-primal or empty
  std::string chars;
  std::string text;
};

// The (2,3) B1 computation printed step by step: ansatz monomials in order,
// the principal row and the homogeneous rows g01..g10.
struct GoldenWorkedExample {
  std::string type;
  int m = 0, n = 0;
  std::vector<std::string> basis;
  std::string principal;
  std::vector<std::pair<std::string, std::string>> homogeneous;
  std::string tp;
};
const GoldenWorkedExample& golden_worked_example();

const std::vector<GoldenTp>& golden_tps();
const std::vector<GoldenFormula>& golden_formulas();

VarTablePtr multi_table();  // s0, s1, cb1, cb2
VarTablePtr char_table(const std::string& kind);

GradedPoly golden_poly(const GoldenTp& g);              // expanded into (c, c'), or over multi_table()
GradedPoly golden_poly(const GoldenFormula& g);         // over char_table(g.chars)
std::optional<GoldenTp> find_golden_tp(const std::string& group, const std::string& type,
                                       std::optional<std::pair<int, int>> pair = {});
std::optional<GoldenFormula> find_golden_formula(const std::string& group, const std::string& row);

// The Tables 4-6 entry for a registry type (c, c') expansion.
GradedPoly golden_tp(const std::string& type, std::optional<std::pair<int, int>> pair = {});

}  // namespace thom
