#include "thom/golden.hpp"

#include "thom/chern.hpp"
#include "thom/errors.hpp"
#include "thom/poly_text.hpp"
#include "thom/registry.hpp"

namespace thom {

namespace {

const char* kLips = "-2*c1^3 + 5*c1^2*cp1 - 4*c1*cp1^2 - c1*c2 + c2*cp1 + cp1^3";
const char* kGoose =
    "2*c1^4 + 5*c1^2*c2 + 4*c2^2 - 7*c1^3*cp1 - 10*c1*c2*cp1 + 9*c1^2*cp1^2 + 5*c2*cp1^2 - 5*c1*cp1^3 + cp1^4"
    " - 2*c1^2*cp2 - 6*c2*cp2 + 4*c1*cp1*cp2 - 2*cp1^2*cp2 + 2*cp2^2";
const char* kGulls =
    "6*c1^4 - c1^2*c2 - 4*c2^2 - 17*c1^3*cp1 + 4*c1*c2*cp1 + 17*c1^2*cp1^2 - 3*c2*cp1^2 - 7*c1*cp1^3 + cp1^4"
    " + 2*c1^2*cp2 + 6*c2*cp2 - 4*c1*cp1*cp2 + 2*cp1^2*cp2 - 2*cp2^2";
const char* kA3 = "cb1^3 + 3*cb1*cb2 + 2*cb3";
const char* kA4 = "cb1^4 + 6*cb1^2*cb2 + 2*cb2^2 + 9*cb1*cb3 + 6*cb4";
const char* kI22 = "cb2^2 - cb1*cb3";

}  // namespace

const GoldenWorkedExample& golden_worked_example() {
  static const GoldenWorkedExample ex{
      "B1",
      2,
      3,
      {"c1^3", "c1*c2", "c1^2*cp1", "c1*cp1^2", "c2*cp1", "cp1^3", "c1*cp2", "cp1*cp2", "cp3"},
      "8x1 + 2x2 + 24x3 + 72x4 + 6x5 + 216x6 + 22x7 + 66x8 + 6x9 = 2",
      {
          {"g01", "x6 = 0"},
          {"g02", "x1 + x3 + x4 + x6 = 0"},
          {"g03", "x4 + 3x6 + x8 = 0"},
          {"g04", "x3 + 2x4 + 3x6 + x7 + x8 = 0"},
          {"g05", "3x1 + x2 + 3x3 + 3x4 + x5 + 3x6 + x7 + x8 = 0"},
          {"g06", "2x3 + 4x4 + x5 + 6x6 + 2x7 + 3x8 + x9 = 0"},
          {"g07", "x1 + 2x3 + 4x4 + 8x6 + x7 + 2x8 = 0"},
          {"g08", "x1 + 3x3 + 9x4 + 27x6 + 2x7 + 6x8 = 0"},
          {"g09", "3x1 + x2 + 7x3 + 16x4 + 2x5 + 36x6 + 6x7 + 13x8 + 2x9 = 0"},
          {"g10", "3x1 + x2 + 8x3 + 21x4 + 3x5 + 54x6 + 7x7 + 19x8 + 2x9 = 0"},
      },
      "-3*c1^3 + 4*c1*c2 + 4*c1^2*cp1 - c1*cp1^2 - 2*c2*cp1 - 3*c1*cp2 + cp1*cp2 + cp3",
  };
  return ex;
}

const std::vector<GoldenTp>& golden_tps() {
  static const std::vector<GoldenTp> rows = {
      {"4", "Fold (=A_1)", "Fold", 2, 2, "cb1"},
      {"4", "Cusp (=A_2)", "Cusp", 2, 2, "cb1^2 + cb2"},
      {"4", "Swallowtail (=A_3)", "Swallowtail", 2, 2, kA3},
      {"4", "Lips/Beaks", "Lips/Beaks", 2, 2, kLips},
      {"4", "Goose", "Goose", 2, 2, kGoose},
      {"4", "Gulls", "Gulls", 2, 2, kGulls},
      {"4", "Butterfly (=A_4)", "Butterfly", 2, 2, kA4},
      {"4", "Sharksfin (=I_2,2)", "Sharksfin", 2, 2, kI22},

      {"5", "Immersion", "Immersion", 2, 3, "1"},
      {"5", "S_0", "S0", 2, 3, "cb2"},
      {"5", "B_1(=S_1)", "B1", 2, 3, "-3*c1^3 + 4*c1*c2 + 4*c1^2*cp1 - 2*c2*cp1 - c1*cp1^2 - 3*c1*cp2 + cp1*cp2 + cp3"},
      {"5", "S_2", "S2", 2, 3,
       "13*c1^4 - 22*c1^2*c2 + 3*c2^2 - 21*c1^3*cp1 + 19*c1*c2*cp1 + 9*c1^2*cp1^2 - 3*c2*cp1^2 - c1*cp1^3"
       " + 14*c1^2*cp2 - 4*c2*cp2 - 9*c1*cp1*cp2 + cp1^2*cp2 + cp2^2 - 6*c1*cp3 + 2*cp1*cp3"},
      {"5", "B_2", "B2", 2, 3,
       "11*c1^4 - 22*c1^2*c2 + c2^2 - 17*c1^3*cp1 + 21*c1*c2*cp1 + 7*c1^2*cp1^2 - 5*c2*cp1^2 - c1*cp1^3"
       " + 10*c1^2*cp2 - 5*c1*cp1*cp2 + cp1^2*cp2 - cp2^2 - 10*c1*cp3 + 4*cp1*cp3"},
      {"5", "H_2", "H2", 2, 3, "cb2^2 + cb1*cb3 + 2*cb4"},
      {"5", "S_3", "S3", 2, 3,
       "-71*c1^5 + 149*c1^3*c2 - 48*c1*c2^2 + 132*c1^4*cp1 - 174*c1^2*c2*cp1 + 20*c2^2*cp1 - 76*c1^3*cp1^2"
       " + 53*c1*c2*cp1^2 + 16*c1^2*cp1^3 - 4*c2*cp1^3 - c1*cp1^4 - 82*c1^3*cp2 + 53*c1*c2*cp2"
       " + 75*c1^2*cp1*cp2 - 17*c2*cp1*cp2 - 18*c1*cp1^2*cp2 + cp1^3*cp2 - 11*c1*cp2^2 + 3*cp1*cp2^2"
       " + 39*c1^2*cp3 - 9*c2*cp3 - 24*c1*cp1*cp3 + 3*cp1^2*cp3 + 3*cp2*cp3"},
      {"5", "B_3", "B3", 2, 3,
       "-110*c1^5 + 286*c1^3*c2 - 76*c1*c2^2 + 192*c1^4*cp1 - 356*c1^2*c2*cp1 + 32*c2^2*cp1 - 104*c1^3*cp1^2"
       " + 134*c1*c2*cp1^2 + 24*c1^2*cp1^3 - 16*c2*cp1^3 - 2*c1*cp1^4 - 100*c1^3*cp2 + 54*c1*c2*cp2"
       " + 70*c1^2*cp1*cp2 - 18*c2*cp1*cp2 - 20*c1*cp1^2*cp2 + 2*cp1^3*cp2 + 10*c1*cp2^2 - 2*cp1*cp2^2"
       " + 106*c1^2*cp3 - 6*c2*cp3 - 72*c1*cp1*cp3 + 14*cp1^2*cp3 - 6*cp2*cp3"},
      {"5", "H_3", "H3", 2, 3,
       "-48*c1^5 + 156*c1^3*c2 - 90*c1*c2^2 + 80*c1^4*cp1 - 182*c1^2*c2*cp1 + 42*c2^2*cp1 - 36*c1^3*cp1^2"
       " + 48*c1*c2*cp1^2 + 4*c1^2*cp1^3 - 2*c2*cp1^3 - 60*c1^3*cp2 + 84*c1*c2*cp2 + 46*c1^2*cp1*cp2"
       " - 26*c2*cp1*cp2 - 6*c1*cp1^2*cp2 - 12*c1*cp2^2 + 2*cp1*cp2^2 + 45*c1^2*cp3 - 27*c2*cp3"
       " - 27*c1*cp1*cp3 + 2*cp1^2*cp3 + 9*cp2*cp3"},
      {"5", "C_3", "C3", 2, 3,
       "-33*c1^5 + 66*c1^3*c2 - 3*c1*c2^2 + 62*c1^4*cp1 - 85*c1^2*c2*cp1 + c2^2*cp1 - 38*c1^3*cp1^2"
       " + 36*c1*c2*cp1^2 + 10*c1^2*cp1^3 - 5*c2*cp1^3 - c1*cp1^4 - 30*c1^3*cp2 + 25*c1^2*cp1*cp2"
       " - 8*c1*cp1^2*cp2 + cp1^3*cp2 + 3*c1*cp2^2 - cp1*cp2^2 + 30*c1^2*cp3 - 22*c1*cp1*cp3 + 4*cp1^2*cp3"},
      {"5", "P_3", "P3", 2, 3,
       "-16*c1^5 + 48*c1^3*c2 - 24*c1*c2^2 + 28*c1^4*cp1 - 58*c1^2*c2*cp1 + 11*c2^2*cp1 - 14*c1^3*cp1^2"
       " + 17*c1*c2*cp1^2 + 2*c1^2*cp1^3 - c2*cp1^3 - 20*c1^3*cp2 + 24*c1*c2*cp2 + 17*c1^2*cp1*cp2"
       " - 8*c2*cp1*cp2 - 3*c1*cp1^2*cp2 - 4*c1*cp2^2 + cp1*cp2^2 + 14*c1^2*cp3 - 6*c2*cp3 - 9*c1*cp1*cp3"
       " + cp1^2*cp3 + 2*cp2*cp3"},

      {"6", "C", "C", 3, 3,
       "2*c1^4 + c1^2*c2 - 2*c2^2 + 3*c1*c3 - 7*c1^3*cp1 - 3*c3*cp1 + 9*c1^2*cp1^2 - c2*cp1^2 - 5*c1*cp1^3"
       " + cp1^4 - 2*c1^2*cp2 + 4*c2*cp2 + 2*c1*cp1*cp2 - 2*cp2^2 - 2*c1*cp3 + 2*cp1*cp3"},
      {"6", "D", "D", 3, 3,
       "18*c1^4 - 21*c1^2*c2 - 2*c2^2 + 8*c1*c3 - 45*c1^3*cp1 + 31*c1*c2*cp1 - 6*c3*cp1 + 40*c1^2*cp1^2"
       " - 12*c2*cp1^2 - 15*c1*cp1^3 + 2*cp1^4 + 13*c1^2*cp2 + 4*c2*cp2 - 17*c1*cp1*cp2 + 6*cp1^2*cp2"
       " - 2*cp2^2 - 8*c1*cp3 + 6*cp1*cp3"},
      // Caption: the remaining (3,3) types share the stable forms of Table 4.
      {"6", "A_1", "A1", 3, 3, "cb1"},
      {"6", "A_2", "A2", 3, 3, "cb1^2 + cb2"},
      {"6", "A_3", "A3", 3, 3, kA3},
      {"6", "A_4", "A4", 3, 3, kA4},
      {"6", "I_2,2", "I22", 3, 3, kI22},

      {"stable", "A_1 (equidim)", "A1", 3, 3, "cb1"},
      {"stable", "A_2 (equidim)", "A2", 3, 3, "cb1^2 + cb2"},
      {"stable", "A_3 (equidim)", "A3", 3, 3, "cb1^3 + 3*cb1*cb2 + cb3"},
      {"stable", "A_4 (equidim)", "A4", 3, 3, kA4},
      {"stable", "I_2,2 (equidim)", "I22", 3, 3, kI22},
      {"stable", "A_1 (n,n+1)", "S0", 2, 3, "cb2"},
      {"stable", "A_2 (n,n+1)", "H2", 2, 3, "cb2^2 + cb1*cb3 + cb4"},

      {"multi", "A_0^2", "", 2, 3, "s0 - cb1"},
      {"multi", "A_1", "", 2, 3, "cb2"},
      {"multi", "A_0^3", "", 2, 3, "1/2*(s0^2 - s1 - 2*s0*cb1 + 2*cb1^2 + 2*cb2)"},
  };
  return rows;
}

const std::vector<GoldenFormula>& golden_formulas() {
  static const std::vector<GoldenFormula> rows = {
      {"7", "Parabolic curve", "Lips/Beaks", "p3-surface", "surface", "8*d - 4*xi1"},
      {"7", "Flecnodal curve", "Swallowtail", "p3-surface", "surface", "20*d - 11*xi1"},
      {"7", "Deg. flecnodal pt", "Butterfly", "p3-surface", "surface", "5*(30*d - 5*xi01 + 12*(-3*xi1 + xi2))"},
      {"7", "Cusp of Gauss", "Gulls", "p3-surface", "surface", "62*d + 3*xi01 - 72*xi1 + 19*xi2"},
      {"7", "Crosscap", "Sharksfin", "p3-surface", "surface", "6*d - xi01 - 4*xi1 + xi2"},
      {"goose", "Goose", "Goose", "p3-surface", "surface", "22*d - xi01 - 24*xi1 + 7*xi2"},
      {"goose", "Goose (ordinary)", "Goose", "p3-surface", "ordinary",
       "2*d*(d - 2)*(3*d - 8) - 5*C + 18*T + eps0*(56 - 18*d)"},

      {"8", "Parabolic curve", "Lips/Beaks", "p3-surface", "ordinary", "4*d*(d - 2) - 8*eps0"},
      {"8", "Flecnodal curve", "Swallowtail", "p3-surface", "ordinary", "d*(11*d - 24) - 22*eps0"},
      {"8", "Deg. flecnodal pt", "Butterfly", "p3-surface", "ordinary",
       "5*d*(d - 4)*(7*d - 12) - 10*C + 105*T + 5*eps0*(80 - 21*d)"},
      {"8", "Cusp of Gauss", "Gulls", "p3-surface", "ordinary",
       "2*d*(d - 2)*(11*d - 24) - 25*C + 66*T + eps0*(184 - 66*d)"},
      {"8", "Crosscap", "Sharksfin", "p3-surface", "ordinary", "C"},

      {"chars", "C", "", "", "surface", "6*d - 4*xi1 + xi2 - xi01"},
      {"chars", "T", "", "", "surface", "1/6*(44*d - 12*d^2 + d^3 - 24*xi1 + 3*d*xi1 + 4*xi2 - 2*xi01)"},
      {"chars", "eps0", "", "", "surface", "1/2*(d^2 - 4*d + xi1)"},
      {"conversion", "xi1", "", "", "ordinary", "d*(4 - d) + 2*eps0"},
      {"conversion", "xi2", "", "", "ordinary", "d*(d - 4)^2 + (16 - 3*d)*eps0 + 3*T - C"},
      {"conversion", "xi01", "", "", "ordinary", "d*(d^2 - 4*d + 6) + (8 - 3*d)*eps0 + 3*T - 2*C"},

      {"9", "B_2", "B2", "p4-surface", "surface", "25*d - 16*xi1"},
      {"9", "H_2", "H2", "p4-surface", "surface", "10*d - 6*xi1"},
      {"9", "H_3", "H3", "p4-surface", "surface", "5*(42*d - 11*xi01 - 51*xi1 + 19*xi2)"},
      {"9", "P_3", "P3", "p4-surface", "surface", "80*d - 15*xi01 - 95*xi1 + 33*xi2"},

      {"10", "B_2", "B2", "p4-surface", "ci", "d1*d2*(16*d1 + 16*d2 - 55)"},
      {"10", "H_2", "H2", "p4-surface", "ci", "d1*d2*(6*d1 + 6*d2 - 20)"},
      {"10", "H_3", "H3", "p4-surface", "ci", "5*d1*d2*(8*d1^2 + 8*d2^2 + 27*d1*d2 - 84*d1 - 84*d2 + 152)"},
      {"10", "P_3", "P3", "p4-surface", "ci", "d1*d2*(18*d1^2 + 18*d2^2 + 51*d1*d2 - 160*d1 - 160*d2 + 280)"},

      {"11", "A_4", "A4", "p4-primal", "primal", "10*d*(5*d - 12)"},
      {"11", "C", "C", "p4-primal", "primal", "5*d*(d - 2)"},
      {"11", "D", "D", "p4-primal", "primal", "10*d*(4*d - 9)"},
      {"primal-extra", "A_3", "A3", "p4-primal", "primal", "6*d"},
      {"primal-extra", "I_2,2", "I22", "p4-primal", "primal", "0"},
  };
  return rows;
}

VarTablePtr multi_table() {
  static const VarTablePtr t = make_table({{"s0", 1}, {"s1", 2}, {"cb1", 1}, {"cb2", 2}});
  return t;
}

VarTablePtr char_table(const std::string& kind) {
  static const VarTablePtr surface = make_table({{"d", 0}, {"xi1", 0}, {"xi2", 0}, {"xi01", 0}});
  static const VarTablePtr ordinary = make_table({{"d", 0}, {"eps0", 0}, {"C", 0}, {"T", 0}});
  static const VarTablePtr ci = make_table({{"d1", 0}, {"d2", 0}});
  static const VarTablePtr primal = make_table({{"d", 0}});
  if (kind == "surface") return surface;
  if (kind == "ordinary") return ordinary;
  if (kind == "ci") return ci;
  if (kind == "primal") return primal;
  throw UsageError("unknown character table " + kind);
}

GradedPoly golden_poly(const GoldenTp& g) {
  if (g.group == "multi") return parse_poly(g.text, multi_table());
  SingularityType shape;
  shape.source_dim = g.m;
  shape.target_dim = g.n;
  shape.known_tp = g.text;
  shape.codim = 6;
  return known_tp_poly(shape).value();
}

GradedPoly golden_poly(const GoldenFormula& g) { return parse_poly(g.text, char_table(g.chars)); }

std::optional<GoldenTp> find_golden_tp(const std::string& group, const std::string& type,
                                       std::optional<std::pair<int, int>> pair) {
  for (const auto& g : golden_tps())
    if (g.group == group && g.type == type && (!pair || *pair == std::make_pair(g.m, g.n))) return g;
  return std::nullopt;
}

std::optional<GoldenFormula> find_golden_formula(const std::string& group, const std::string& row) {
  for (const auto& g : golden_formulas())
    if (g.group == group && (g.row == row || g.type == row)) return g;
  return std::nullopt;
}

GradedPoly golden_tp(const std::string& type, std::optional<std::pair<int, int>> pair) {
  std::string name = canonical_type_name(type, pair);
  for (const char* group : {"4", "5", "6"})
    if (auto g = find_golden_tp(group, name, pair)) return golden_poly(*g);
  throw UnknownName("no published Thom polynomial for " + type);
}

}  // namespace thom
