#include "thom/solver.hpp"

#include <algorithm>
#include <sstream>

#include "thom/errors.hpp"
#include "thom/linear_solve.hpp"
#include "thom/poly_text.hpp"

namespace thom {

GradedPoly Ansatz::assemble(const std::vector<Rational>& x) const {
  GradedPoly p(vars);
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], x.at(i));
  return p;
}

Ansatz make_ansatz(const SingularityType& target) {
  Ansatz a;
  a.target = &target;
  a.vars = chern_table(target.source_dim, target.target_dim);
  a.basis = monomial_basis(*a.vars, target.codim);
  return a;
}

VarTablePtr torus_table(int rank) {
  if (rank < 1) throw UsageError("torus rank must be positive");
  if (rank == 1) return make_table({{"a", 1}});
  return make_table(indexed_vars("a", rank, 1));
}

namespace {

GradedPoly linear_form(const VarTablePtr& torus, const Weight& w) {
  GradedPoly f(torus);
  for (std::size_t k = 0; k < w.size(); ++k) {
    Exponents e(torus->size(), 0);
    e[k] = 1;
    f.add_term(e, w[k]);
  }
  return f;
}

GradedPoly total_chern(const VarTablePtr& torus, const std::vector<Weight>& ws, int s) {
  GradedPoly c = GradedPoly::constant(torus, 1);
  for (const auto& w : ws) c = (c * (linear_form(torus, w) + Rational(1))).truncate(s);
  return c;
}

void check_weights(const SingularityType& t) {
  if (static_cast<int>(t.source_weights.size()) != t.source_dim ||
      static_cast<int>(t.target_weights.size()) != t.target_dim)
    throw UsageError("type " + t.name + " lacks torus weight data");
  for (const auto* ws : {&t.source_weights, &t.target_weights, &t.normal_weights})
    for (const auto& w : *ws)
      if (static_cast<int>(w.size()) != t.torus_rank) throw UsageError("type " + t.name + " has ragged weights");
}

bool reversed_less(const Equation& a, const Equation& b) {
  for (std::size_t i = a.coeffs.size(); i-- > 0;) {
    if (a.coeffs[i] != b.coeffs[i]) return a.coeffs[i] < b.coeffs[i];
  }
  return a.rhs < b.rhs;
}

std::vector<Equation> build_rows(const Ansatz& ansatz, const SingularityType& t, const GradedPoly* rhs,
                                 const std::string& role) {
  if (t.pair() != ansatz.target->pair()) throw UsageError("type " + t.name + " has a different dimension pair");
  const int s = ansatz.target->codim;
  TorusBindings tb = torus_substitution(t, s);
  std::vector<GradedPoly> images;
  for (std::size_t i = 0; i < ansatz.size(); ++i)
    images.push_back(substitute(ansatz.monomial(i), tb.bindings, tb.torus));

  std::vector<Equation> rows;
  for (const auto& mu : monomial_basis(*tb.torus, s)) {
    Equation eq;
    eq.source = t.name;
    eq.role = role;
    eq.torus_monomial = mu;
    eq.torus_text = render(GradedPoly::monomial(tb.torus, mu));
    for (const auto& img : images) eq.coeffs.push_back(img.coefficient_of(mu));
    eq.rhs = rhs ? rhs->coefficient_of(mu) : Rational(0);
    bool zero = eq.rhs.is_zero() &&
                std::all_of(eq.coeffs.begin(), eq.coeffs.end(), [](const Rational& c) { return c.is_zero(); });
    if (zero) continue;
    bool dup = std::any_of(rows.begin(), rows.end(),
                           [&](const Equation& r) { return r.coeffs == eq.coeffs && r.rhs == eq.rhs; });
    if (!dup) rows.push_back(std::move(eq));
  }
  std::stable_sort(rows.begin(), rows.end(), reversed_less);
  return rows;
}

std::string two_digit(std::size_t k) {
  std::string s = std::to_string(k);
  return s.size() < 2 ? "0" + s : s;
}

void label_rows(std::vector<Equation>& rows) {
  std::size_t np = 0, ng = 0, total_p = 0;
  for (const auto& r : rows) total_p += r.role == "principal";
  for (auto& r : rows) {
    if (r.role == "principal") r.label = total_p == 1 ? "p" : "p" + std::to_string(++np);
    else r.label = "g" + two_digit(++ng);
  }
}

}  // namespace

TorusBindings torus_substitution(const SingularityType& t, int s) {
  check_weights(t);
  TorusBindings tb;
  tb.torus = torus_table(t.torus_rank);
  GradedPoly cs = total_chern(tb.torus, t.source_weights, s);
  GradedPoly ct = total_chern(tb.torus, t.target_weights, s);
  for (int i = 1; i <= t.source_dim; ++i) tb.bindings.emplace("c" + std::to_string(i), cs.part(i));
  for (int j = 1; j <= t.target_dim; ++j) tb.bindings.emplace("cp" + std::to_string(j), ct.part(j));
  return tb;
}

GradedPoly euler_class(const SingularityType& t) {
  check_weights(t);
  auto torus = torus_table(t.torus_rank);
  GradedPoly e = GradedPoly::constant(torus, 1);
  for (const auto& w : t.normal_weights) e *= linear_form(torus, w);
  return e;
}

std::string Equation::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rational& c = coeffs[i];
    if (c.is_zero()) continue;
    if (first) os << (c.sign() < 0 ? "-" : "");
    else os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    if (!c.abs().is_one()) os << c.abs();
    os << "x" << i + 1;
  }
  if (first) os << "0";
  os << " = " << rhs;
  return os.str();
}

std::vector<Equation> principal_equation(const Ansatz& ansatz, const SingularityType& target) {
  if (target.has_modulus())
    throw SolverError(SolverError::Kind::ModulusDirection,
                      target.name + ": a normal weight is zero (modulus direction); no principal equation");
  if (!target.solvable)
    throw SolverError(SolverError::Kind::NotSolvable, target.name + " is registered as closed-form only");
  GradedPoly e = euler_class(target);
  auto rows = build_rows(ansatz, target, &e, "principal");
  label_rows(rows);
  return rows;
}

std::vector<Equation> homogeneous_equations(const Ansatz& ansatz, const SingularityType& lower) {
  if (lower.name == ansatz.target->name && lower.pair() == ansatz.target->pair())
    throw UsageError("homogeneous equations need a type other than the target");
  if (lower.codim > ansatz.target->codim) throw UsageError(lower.name + " has larger codimension than the target");
  auto rows = build_rows(ansatz, lower, nullptr, "homogeneous");
  label_rows(rows);
  return rows;
}

std::vector<const SingularityType*> default_constraints(const Registry& reg, const SingularityType& target) {
  std::vector<const SingularityType*> out;
  for (const auto* t : reg.of_pair(target.source_dim, target.target_dim))
    if (t->codim <= target.codim && !(t->name == target.name)) out.push_back(t);
  std::stable_sort(out.begin(), out.end(), [](auto* a, auto* b) { return a->codim < b->codim; });
  return out;
}

SolveResult solve_tp(const SingularityType& target, const std::vector<const SingularityType*>& constraints) {
  Ansatz ansatz = make_ansatz(target);
  SolveReport rep;
  rep.target = target.name;
  rep.pair = target.pair();
  rep.unknowns = ansatz.size();
  for (std::size_t i = 0; i < ansatz.size(); ++i) rep.basis.push_back(render(ansatz.monomial(i)));

  rep.equations = principal_equation(ansatz, target);
  for (const auto* t : constraints) {
    rep.constraints.push_back(t->name);
    auto rows = homogeneous_equations(ansatz, *t);
    rep.equations.insert(rep.equations.end(), rows.begin(), rows.end());
  }
  label_rows(rep.equations);

  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  for (const auto& eq : rep.equations) {
    A.push_back(eq.coeffs);
    b.push_back(eq.rhs);
  }
  auto el = eliminate(A, b, ansatz.size(), RationalOps{});
  rep.rank = el.rank;
  for (std::size_t r : el.pivot_rows) rep.pivot_rows.push_back(rep.equations[r].label);
  rep.kernel_dim = el.free_cols.size();
  rep.consistent = el.consistent();
  rep.unique = el.unique();

  if (el.conflict) {
    const auto& row = rep.equations[el.conflict->row];
    std::string partner = el.conflict->partners.empty() ? std::string("(none)")
                                                        : rep.equations[el.conflict->partners.front()].label;
    rep.conflict = row.label + " vs " + partner;
    throw SolveFailure(SolverError::Kind::Inconsistent,
                       target.name + ": inconsistent system, row " + row.label + " (" + row.source + ", " +
                           row.torus_text + ") conflicts with row " + partner,
                       rep);
  }
  if (!el.free_cols.empty()) {
    std::string msg = target.name + ": underdetermined system, kernel dimension " + std::to_string(rep.kernel_dim) +
                      "; add constraint types of codimension <= " + std::to_string(target.codim) +
                      " (equal-codimension types are valid constraints)";
    throw SolveFailure(SolverError::Kind::Underdetermined, msg, rep);
  }

  rep.solution = el.solution;
  GradedPoly tp = ansatz.assemble(el.solution);
  rep.tp = tp;
  rep.integral = tp.integral_coefficients();
  rep.verified = std::all_of(rep.equations.begin(), rep.equations.end(), [&](const Equation& eq) {
    Rational lhs(0);
    for (std::size_t i = 0; i < eq.coeffs.size(); ++i) lhs += eq.coeffs[i] * el.solution[i];
    return lhs == eq.rhs;
  });
  if (!rep.verified) throw SolveFailure(SolverError::Kind::Inconsistent, target.name + ": back-substitution failed", rep);
  if (!rep.integral)
    throw SolveFailure(SolverError::Kind::NonIntegral, target.name + ": solution has non-integral coefficients", rep);
  return {tp, rep};
}

SolveResult solve_tp(const Registry& reg, const SingularityType& target) {
  return solve_tp(target, default_constraints(reg, target));
}

GradedPoly restrict_to(const GradedPoly& tp, const SingularityType& t) {
  int s = tp.max_degree().value_or(0);
  TorusBindings tb = torus_substitution(t, std::max(s, t.target_dim));
  return substitute(embed(tp, chern_table(t.source_dim, t.target_dim)), tb.bindings, tb.torus);
}

ConsistencyReport consistency_check(const GradedPoly& tp, const std::vector<const SingularityType*>& lower_types,
                                    const SingularityType* target) {
  ConsistencyReport rep;
  if (!tp.is_homogeneous()) rep.violations.push_back("polynomial is not homogeneous");
  for (const auto* t : lower_types) {
    GradedPoly r = restrict_to(tp, *t);
    if (!r.is_zero()) rep.violations.push_back("nonzero residual at " + t->name + ": " + render(r));
    rep.residuals.push_back({t->name, r, false});
  }
  if (target && !target->has_modulus()) {
    GradedPoly r = restrict_to(tp, *target) - euler_class(*target);
    if (!r.is_zero()) rep.violations.push_back("principal mismatch at " + target->name + ": " + render(r));
    rep.residuals.push_back({target->name, r, true});
  }
  return rep;
}

}  // namespace thom
