#include "thom/chern.hpp"

#include <map>

#include "thom/errors.hpp"
#include "thom/linear_solve.hpp"

namespace thom {

GradedPoly ChernVector::total() const {
  GradedPoly s = GradedPoly::constant(table(), 1);
  for (const auto& c : classes) s += c;
  return s;
}

ChernVector ChernVector::from_total(const GradedPoly& total, int rank) {
  ChernVector v;
  v.rank = rank;
  for (int k = 1; k <= rank; ++k) v.classes.push_back(total.part(k));
  return v;
}

ChernVector ChernVector::formal(const VarTablePtr& vars, const std::string& prefix, int rank) {
  ChernVector v;
  v.rank = rank;
  for (int k = 1; k <= rank; ++k) {
    std::string name = prefix + std::to_string(k);
    if ((*vars)[vars->index(name)].weight != k) throw UsageError(name + " must have weight " + std::to_string(k));
    v.classes.push_back(GradedPoly::variable(vars, name));
  }
  return v;
}

std::vector<GradedPoly> quotient_chern(const ChernVector& c, const ChernVector& c_target, int max_degree) {
  if (!same_table(c.table(), c_target.table())) throw UsageError("quotient_chern over different tables");
  GradedPoly q = (c_target.total() * truncated_inverse(c.total(), max_degree)).truncate(max_degree);
  std::vector<GradedPoly> out;
  for (int k = 1; k <= max_degree; ++k) out.push_back(q.part(k));
  return out;
}

GradedPoly expand_quotient_form(const GradedPoly& tp_in_cbar, int m, int n) {
  VarTablePtr target = chern_table(m, n);
  int deg = tp_in_cbar.max_degree().value_or(0);
  auto cbar = quotient_chern(ChernVector::formal(target, "c", m), ChernVector::formal(target, "cp", n),
                             std::max(deg, 1));
  Bindings b;
  for (const auto& v : tp_in_cbar.vars().variables()) {
    if (v.name.rfind("cb", 0) != 0) continue;
    int k = std::stoi(v.name.substr(2));
    if (k < 1) throw UsageError("bad quotient class " + v.name);
    b.emplace(v.name, k <= deg ? cbar[k - 1] : GradedPoly(target));
  }
  return substitute(tp_in_cbar, b, target);
}

std::optional<GradedPoly> to_quotient_form(const GradedPoly& tp, int m, int n) {
  if (!tp.is_homogeneous()) return std::nullopt;
  const int deg = tp.max_degree().value_or(0);
  VarTablePtr cb = make_table(indexed_vars("cb", std::max(deg, 1)));
  VarTablePtr target = chern_table(m, n);
  GradedPoly src = embed(tp, target);
  if (deg == 0) return embed(src, cb);
  // tp = sum x_i expand(m_i) over the cb-monomials of degree deg
  std::vector<Exponents> basis = monomial_basis(*cb, deg);
  std::vector<GradedPoly> images;
  std::map<Exponents, std::size_t> rows;
  for (const auto& e : basis) {
    images.push_back(expand_quotient_form(GradedPoly::monomial(cb, e), m, n));
    for (const auto& [te, c] : images.back().terms()) rows.emplace(te, rows.size());
  }
  for (const auto& [te, c] : src.terms()) rows.emplace(te, rows.size());
  std::vector<std::vector<Rational>> A(rows.size(), std::vector<Rational>(basis.size()));
  std::vector<Rational> b(rows.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [te, c] : images[j].terms()) A[rows.at(te)][j] = c;
  for (const auto& [te, c] : src.terms()) b[rows.at(te)] = c;
  auto el = eliminate(A, b, basis.size(), RationalOps{});
  if (!el.consistent()) return std::nullopt;
  // dependent monomials: free coefficients are zero
  GradedPoly out(cb);
  for (std::size_t j = 0; j < basis.size(); ++j) out.add_term(basis[j], el.solution[j]);
  return out;
}

ChernVector twist_chern(const GradedPoly& ell, const ChernVector& W, const QuotientRing* R) {
  if (!same_table(ell.table(), W.table())) throw UsageError("twist over different tables");
  if (!ell.is_homogeneous(1)) throw UsageError("twisting class must have degree 1");
  const int r = W.rank;
  ChernVector out;
  out.rank = r;
  std::vector<GradedPoly> ell_pow{GradedPoly::constant(ell.table(), 1)};
  for (int k = 1; k <= r; ++k) ell_pow.push_back(ell_pow.back() * ell);
  for (int k = 1; k <= r; ++k) {
    GradedPoly ck(ell.table());
    for (int i = 0; i <= k; ++i) {
      GradedPoly ci = i == 0 ? GradedPoly::constant(ell.table(), 1) : W[i];
      ck += ell_pow[k - i] * ci * binomial(r - i, k - i);
    }
    out.classes.push_back(R ? R->reduce(ck) : ck);
  }
  return out;
}

ChernVector flag_target_chern(const QuotientRing& R, int n, const std::string& base, const std::string& fiber) {
  if (n != 3 && n != 4) throw UsageError("flag_target_chern supports n = 3 or 4");
  const auto& vars = R.table();
  GradedPoly one = GradedPoly::constant(vars, 1);
  GradedPoly h = GradedPoly::variable(vars, base);
  GradedPoly t = GradedPoly::variable(vars, fiber);
  // c(S) = (1 - h)(1 - t), c(V) = 1/c(S); V has rank n - 1.
  GradedPoly cv = truncated_inverse((one - h) * (one - t), n - 1);
  ChernVector V = ChernVector::from_total(R.reduce(cv), n - 1);
  return twist_chern(h, V, &R);
}

ChernVector flag_target_chern(int n) {
  if (n != 3 && n != 4) throw UsageError("flag_target_chern supports n = 3 or 4");
  return flag_target_chern(projective_flag_ring(n), n);
}

}  // namespace thom
