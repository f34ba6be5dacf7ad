#pragma once

#include <string>
#include <string_view>

#include "thom/graded_poly.hpp"

namespace thom {

// Canonical text: terms by descending weighted degree, then basis order;
// factors joined by '*', powers by '^', e.g. "-3*c1^3 + 4*c1*c2 + cp3".
std::string render(const GradedPoly& p);

// Parses +, -, *, ^, parentheses, integer literals and division by a nonzero
// constant. "c'2" is read as cp2 and "**" as '^'. Identifiers must exist in
// `vars`.
GradedPoly parse_poly(std::string_view text, const VarTablePtr& vars);

// LaTeX with c_{1}, c'_{2}, \bar{c}_{3}, \xi_{01}, ...
std::string render_latex(const GradedPoly& p);
std::string latex_variable(const std::string& name);

}  // namespace thom
