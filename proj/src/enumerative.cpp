#include "thom/enumerative.hpp"

#include <algorithm>
#include <cctype>

#include "thom/golden.hpp"
#include "thom/linear_solve.hpp"
#include "thom/poly_text.hpp"

namespace thom {

namespace {

const std::vector<std::string> kSurfaceChars = {"d", "xi1", "xi2", "xi01"};

bool is_char(const std::string& name, Pipeline p) {
  if (p == Pipeline::P4Primal) return name == "d";
  return std::find(kSurfaceChars.begin(), kSurfaceChars.end(), name) != kSurfaceChars.end();
}

}  // namespace

Pipeline parse_pipeline(const std::string& name) {
  if (name == "p3-surface") return Pipeline::P3Surface;
  if (name == "p4-surface") return Pipeline::P4Surface;
  if (name == "p4-primal") return Pipeline::P4Primal;
  throw UnknownName("unknown pipeline '" + name + "' (expected p3-surface, p4-surface or p4-primal)");
}

std::string pipeline_name(Pipeline p) {
  switch (p) {
    case Pipeline::P3Surface: return "p3-surface";
    case Pipeline::P4Surface: return "p4-surface";
    case Pipeline::P4Primal: return "p4-primal";
  }
  return "";
}

PushforwardSpec make_spec(Pipeline p) {
  if (p == Pipeline::P4Primal) {
    auto flag = make_table({{"a", 1}, {"t", 1}, {"d", 0}});
    auto push = make_table({{"a", 1}, {"d", 0}});
    QuotientRing R = flag_ring(flag, "a", "t", 4, {Truncation{{0}, 3}});
    // c(TX) = (1 + a)^5 / (1 + d a) for a hypersurface of degree d in P^4.
    GradedPoly a = R.var("a"), d = R.var("d"), one = R.one();
    GradedPoly total = R.reduce((one + a).pow(5) * truncated_inverse(one + d * a, 3));
    return PushforwardSpec{p, 4, 3, 4, flag, push, R, ChernVector::from_total(total, 3)};
  }
  int n = p == Pipeline::P3Surface ? 3 : 4;
  auto flag = make_table({{"c1", 1}, {"c2", 2}, {"h", 1}, {"t", 1},
                          {"d", 0}, {"xi1", 0}, {"xi2", 0}, {"xi01", 0}});
  auto push = make_table({{"a", 1}, {"d", 0}, {"xi1", 0}, {"xi2", 0}, {"xi01", 0}});
  QuotientRing R = flag_ring(flag, "h", "t", n, {Truncation{{0, 1, 2}, 2}});
  return PushforwardSpec{p, n, 2, n, flag, push, R, std::nullopt};
}

GradedPoly locus_class(const GradedPoly& tp, const PushforwardSpec& spec) {
  const std::string base = spec.pipeline == Pipeline::P4Primal ? "a" : "h";
  ChernVector target = flag_target_chern(spec.flag, spec.n, base, "t");
  Bindings b;
  for (std::size_t i = 0; i < tp.vars().size(); ++i) {
    const std::string& name = tp.vars()[i].name;
    if (name.rfind("cp", 0) == 0) {
      int k = std::stoi(name.substr(2));
      b[name] = k <= target.rank ? target[k] : spec.flag.zero();
    } else if (name.size() > 1 && name[0] == 'c' && std::isdigit(static_cast<unsigned char>(name[1]))) {
      int k = std::stoi(name.substr(1));
      if (spec.tangent) {
        b[name] = k <= spec.tangent->rank ? (*spec.tangent)[k] : spec.flag.zero();
      } else if (k > spec.m) {
        b[name] = spec.flag.zero();
      }
    } else {
      throw UsageError("locus_class: unexpected variable '" + name + "'");
    }
  }
  return spec.flag.reduce(substitute(tp, b, spec.flag_vars));
}

GradedPoly flag_pushdown(const GradedPoly& x, const PushforwardSpec& spec) {
  return gysin_pushforward(x, spec.flag);
}

// f_*(h^k c^mu) = f_*(c^mu) a^k; f_*(1) = d a^(n-m), and for surfaces
// f_*(c1) = xi1 a^(n-1), f_*(c1^2) = xi2 a^n, f_*(c2) = xi01 a^n.
GradedPoly xi_pushforward(const GradedPoly& x, const PushforwardSpec& spec) {
  const VarTable& fv = *spec.flag_vars;
  GradedPoly out(spec.push_vars);
  const std::size_t ia = spec.push_vars->index("a");
  const std::string base = spec.pipeline == Pipeline::P4Primal ? "a" : "h";
  for (const auto& [e, coef] : x.terms()) {
    Exponents img(spec.push_vars->size(), 0);
    int k = 0, c1 = 0, c2 = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      const std::string& name = fv[i].name;
      if (name == base) {
        k = e[i];
      } else if (name == "c1") {
        c1 = e[i];
      } else if (name == "c2") {
        c2 = e[i];
      } else if (is_char(name, spec.pipeline)) {
        img[spec.push_vars->index(name)] += e[i];
      } else {
        throw UsageError("xi_pushforward: class still involves '" + name + "'");
      }
    }
    int cdeg = c1 + 2 * c2;
    if (cdeg + k > spec.m) continue;
    std::string ch;
    if (cdeg == 0) ch = "d";
    else if (c1 == 1 && c2 == 0) ch = "xi1";
    else if (c1 == 2 && c2 == 0) ch = "xi2";
    else if (c1 == 0 && c2 == 1) ch = "xi01";
    else throw UsageError("xi_pushforward: no character for this monomial");
    img[spec.push_vars->index(ch)] += 1;
    img[ia] += k + spec.n - spec.m + cdeg;
    if (img[ia] > spec.n) continue;
    out.add_term(img, coef);
  }
  return out;
}

GradedPoly pullback(const GradedPoly& y, const PushforwardSpec& spec) {
  const std::string base = spec.pipeline == Pipeline::P4Primal ? "a" : "h";
  Bindings b{{"a", GradedPoly::variable(spec.flag_vars, base)}};
  return spec.flag.reduce(substitute(y, b, spec.flag_vars));
}

namespace {

// lambda with class = lambda a^k; throws unless the class is a single a-power.
GradedPoly single_power_coefficient(const GradedPoly& cls, const VarTablePtr& chars, int& k) {
  const std::size_t ia = cls.vars().index("a");
  k = -1;
  for (const auto& [e, c] : cls.terms()) {
    if (k >= 0 && e[ia] != k) throw DomainError("pushforward is not homogeneous in a: " + cls.str());
    k = e[ia];
  }
  if (k < 0) return GradedPoly(chars);
  return embed(cls.coefficient_in(ia, k), chars);
}

}  // namespace

GradedPoly locus_degree(const GradedPoly& tp, const PushforwardSpec& spec) {
  if (auto deg = tp.max_degree(); deg && *deg > spec.flag_dimension())
    throw EmptyLocus("Thom polynomial of degree " + std::to_string(*deg) + " exceeds flag dimension " +
                     std::to_string(spec.flag_dimension()) + ": the locus is empty");
  GradedPoly down = flag_pushdown(locus_class(tp, spec), spec);
  if (spec.pipeline == Pipeline::P4Primal) {
    // int_X a^k . a^(3-k) = d
    auto chars = char_table("primal");
    GradedPoly out(chars);
    const std::size_t ia = down.vars().index("a");
    GradedPoly d = GradedPoly::variable(chars, "d");
    for (int k = 0; k <= 3; ++k) out += embed(down.coefficient_in(ia, k), chars) * d;
    return out;
  }
  int k = 0;
  return single_power_coefficient(xi_pushforward(down, spec), char_table("surface"), k);
}

GradedPoly locus_degree(const GradedPoly& tp, Pipeline p) { return locus_degree(tp, make_spec(p)); }

OrdinaryFormulas stable_multisingularity_chars() {
  PushforwardSpec spec = make_spec(Pipeline::P3Surface);
  const QuotientRing& R = spec.flag;
  auto chars = char_table("surface");
  GradedPoly one = R.one(), h = R.var("h"), c1 = R.var("c1"), c2 = R.var("c2");
  // virtual normal bundle cbar = f^*c(TP^3) / c(TM)
  GradedPoly cbar = R.reduce((one + h).pow(4) * truncated_inverse(one + c1 + c2, 2));
  GradedPoly cb1 = cbar.part(1), cb2 = cbar.part(2);
  GradedPoly s0 = pullback(xi_pushforward(one, spec), spec);
  GradedPoly s1 = pullback(xi_pushforward(cb1, spec), spec);
  Bindings b{{"s0", s0}, {"s1", s1}, {"cb1", cb1}, {"cb2", cb2}};

  auto degree_of = [&](const GradedPoly& cls) {
    int k = 0;
    return single_power_coefficient(xi_pushforward(R.reduce(cls), spec), chars, k);
  };
  auto multi_tp = [&](const std::string& row) {
    for (const auto& g : golden_tps())
      if (g.group == "multi" && g.row == row) return substitute(golden_poly(g), b, spec.flag_vars);
    throw UsageError("missing multi-singularity class " + row);
  };
  OrdinaryFormulas out;
  out.C = degree_of(multi_tp("A_1"));
  out.eps0 = degree_of(multi_tp("A_0^2")) * Rational(1, 2);
  out.T = degree_of(multi_tp("A_0^3")) * Rational(1, 3);
  return out;
}

namespace {

struct PolyOps {
  VarTablePtr table;
  bool is_zero(const GradedPoly& x) const { return x.is_zero(); }
  bool invertible(const GradedPoly& x) const { return x.is_constant() && !x.is_zero(); }
  GradedPoly inverse(const GradedPoly& x) const { return GradedPoly::constant(table, x.constant_term().inverse()); }
  GradedPoly zero() const { return GradedPoly(table); }
};

}  // namespace

CharacterConversion solve_character_conversion() {
  OrdinaryFormulas f = stable_multisingularity_chars();
  auto surf = char_table("surface");
  auto ord = char_table("ordinary");
  const std::vector<std::string> xi = {"xi1", "xi2", "xi01"};
  const std::vector<std::pair<std::string, const GradedPoly*>> rows = {{"eps0", &f.eps0}, {"C", &f.C}, {"T", &f.T}};

  std::vector<std::vector<GradedPoly>> A;
  std::vector<GradedPoly> rhs;
  for (const auto& [name, F] : rows) {
    GradedPoly rest = *F;
    std::vector<GradedPoly> row;
    for (const auto& x : xi) {
      std::size_t i = surf->index(x);
      if (F->max_exponent(i) > 1) throw DomainError("character formula is not linear in " + x);
      GradedPoly coef = F->coefficient_in(i, 1);
      for (const auto& y : xi)
        if (coef.max_exponent(surf->index(y)) > 0) throw DomainError("character formula has mixed xi terms");
      row.push_back(embed(coef, ord));
      rest -= coef * GradedPoly::variable(surf, x);
    }
    A.push_back(std::move(row));
    rhs.push_back(GradedPoly::variable(ord, name) - embed(rest, ord));
  }
  auto el = eliminate(A, rhs, xi.size(), PolyOps{ord});
  if (!el.unique()) throw DomainError("character system is not uniquely solvable");
  CharacterConversion out{el.solution[0], el.solution[1], el.solution[2]};

  Bindings to_ord{{"xi1", out.xi1}, {"xi2", out.xi2}, {"xi01", out.xi01}};
  out.round_trip_ordinary = substitute(f.eps0, to_ord, ord) == GradedPoly::variable(ord, "eps0") &&
                            substitute(f.C, to_ord, ord) == GradedPoly::variable(ord, "C") &&
                            substitute(f.T, to_ord, ord) == GradedPoly::variable(ord, "T");
  Bindings to_surf{{"eps0", f.eps0}, {"C", f.C}, {"T", f.T}};
  out.round_trip_surface = substitute(out.xi1, to_surf, surf) == GradedPoly::variable(surf, "xi1") &&
                           substitute(out.xi2, to_surf, surf) == GradedPoly::variable(surf, "xi2") &&
                           substitute(out.xi01, to_surf, surf) == GradedPoly::variable(surf, "xi01");
  return out;
}

GradedPoly ordinary_table(const GradedPoly& surface_formula) {
  static const CharacterConversion conv = solve_character_conversion();
  Bindings b{{"xi1", conv.xi1}, {"xi2", conv.xi2}, {"xi01", conv.xi01}};
  return substitute(embed(surface_formula, char_table("surface")), b, char_table("ordinary"));
}

SurfaceChars complete_intersection_chars() {
  auto M = make_table({{"h", 1}, {"d1", 0}, {"d2", 0}});
  QuotientRing R(M, {Truncation{{0}, 2}});
  auto ci = char_table("ci");
  GradedPoly one = R.one(), h = R.var("h"), d1 = R.var("d1"), d2 = R.var("d2");
  GradedPoly total = R.reduce((one + h).pow(5) * truncated_inverse((one + d1 * h) * (one + d2 * h), 2));
  GradedPoly c1 = total.part(1), c2 = total.part(2);
  // int_M x = (coefficient of h^2) d1 d2
  auto integrate = [&](const GradedPoly& x) {
    return embed(R.reduce(x).coefficient_in(0, 2) * d1 * d2, ci);
  };
  return SurfaceChars{integrate(h * h), integrate(c1 * h), integrate(c1 * c1), integrate(c2)};
}

GradedPoly specialize(const GradedPoly& surface_formula, const SurfaceChars& chars) {
  Bindings b{{"d", chars.d}, {"xi1", chars.xi1}, {"xi2", chars.xi2}, {"xi01", chars.xi01}};
  return substitute(surface_formula, b, chars.d.table());
}

Rational evaluate_characters(const GradedPoly& formula, const std::map<std::string, Rational>& values) {
  auto empty = make_table({});
  Bindings b;
  for (std::size_t i = 0; i < formula.vars().size(); ++i) {
    const std::string& name = formula.vars()[i].name;
    auto it = values.find(name);
    if (it != values.end()) {
      b[name] = GradedPoly::constant(empty, it->second);
    } else if (formula.max_exponent(i) > 0) {
      throw UsageError("no value given for character '" + name + "'");
    } else {
      b[name] = GradedPoly(empty);
    }
  }
  return substitute(formula, b, empty).constant_term();
}

}  // namespace thom
