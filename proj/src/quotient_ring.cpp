#include "thom/quotient_ring.hpp"

#include "thom/errors.hpp"

namespace thom {

QuotientRing::QuotientRing(VarTablePtr vars, std::vector<Truncation> truncations,
                           std::optional<FiberRelation> relation)
    : vars_(std::move(vars)), truncs_(std::move(truncations)), rel_(std::move(relation)) {
  if (!vars_) throw UsageError("quotient ring without variables");
  for (const auto& tr : truncs_)
    for (std::size_t v : tr.vars)
      if (v >= vars_->size()) throw UsageError("truncation variable out of range");
  if (rel_) {
    if (rel_->var >= vars_->size()) throw UsageError("fiber variable out of range");
    if (rel_->rho < 1 || static_cast<int>(rel_->coeffs.size()) != rel_->rho)
      throw UsageError("fiber relation must have rho coefficients");
    int wt = (*vars_)[rel_->var].weight;
    for (int i = 1; i <= rel_->rho; ++i) {
      const GradedPoly& b = rel_->coeffs[i - 1];
      if (!same_table(b.table(), vars_)) throw UsageError("relation coefficient over foreign table");
      if (b.max_exponent(rel_->var) != 0) throw UsageError("relation coefficient involves the fiber variable");
      if (!b.is_homogeneous(i * wt)) throw UsageError("relation is not homogeneous");
    }
  }
}

bool QuotientRing::truncated(const Exponents& e) const {
  for (const auto& tr : truncs_) {
    int d = 0;
    for (std::size_t v : tr.vars) d += e[v] * (*vars_)[v].weight;
    if (d > tr.max_degree) return true;
  }
  return false;
}

GradedPoly QuotientRing::truncate(const GradedPoly& x) const {
  if (!same_table(x.table(), vars_)) throw UsageError("element over foreign table");
  GradedPoly out(vars_);
  for (const auto& [e, c] : x.terms())
    if (!truncated(e)) out.add_term(e, c);
  return out;
}

GradedPoly QuotientRing::reduce(const GradedPoly& x) const {
  GradedPoly work = truncate(x);
  if (!rel_) return work;
  const std::size_t t = rel_->var;
  const int rho = rel_->rho;
  GradedPoly done(vars_);
  while (!work.is_zero()) {
    GradedPoly next(vars_);
    for (const auto& [e, c] : work.terms()) {
      if (e[t] < rho) {
        done.add_term(e, c);
        continue;
      }
      // t^k m -> -sum_i b_i t^(k-i) m ; strictly lowers the t-degree.
      Exponents rest = e;
      rest[t] -= rho;
      for (int i = 1; i <= rho; ++i) {
        Exponents shift = rest;
        shift[t] += rho - i;
        GradedPoly piece = GradedPoly::monomial(vars_, shift, -c) * rel_->coeffs[i - 1];
        for (const auto& [pe, pc] : piece.terms())
          if (!truncated(pe)) next.add_term(pe, pc);
      }
    }
    work = std::move(next);
  }
  return done;
}

QuotientRing flag_ring(VarTablePtr vars, const std::string& base, const std::string& fiber, int n,
                       std::vector<Truncation> truncations) {
  if (n < 1) throw UsageError("flag ring needs n >= 1");
  GradedPoly h = GradedPoly::variable(vars, base);
  GradedPoly cq = truncated_inverse(GradedPoly::constant(vars, 1) - h, n);
  FiberRelation rel;
  rel.var = vars->index(fiber);
  rel.rho = n;
  for (int i = 1; i <= n; ++i) rel.coeffs.push_back(cq.part(i));
  return QuotientRing(std::move(vars), std::move(truncations), std::move(rel));
}

QuotientRing projective_flag_ring(int n) {
  auto vars = make_table({{"a", 1}, {"t", 1}});
  return flag_ring(vars, "a", "t", n, {Truncation{{0}, n}});
}

QuotientRing projective_ring(int n) {
  auto vars = make_table({{"a", 1}});
  return QuotientRing(vars, {Truncation{{0}, n}});
}

GradedPoly gysin_pushforward(const GradedPoly& x, const QuotientRing& R) {
  if (!R.relation()) throw UsageError("gysin_pushforward needs a fiber relation");
  return R.reduce(x).coefficient_in(R.relation()->var, R.rho() - 1);
}

Rational integrate_pn(const GradedPoly& x, int n) {
  auto ia = x.vars().find("a");
  if (!ia) throw UsageError("integrate_pn needs the variable a");
  Rational out(0);
  for (const auto& [e, c] : x.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != *ia && e[i] != 0) throw UsageError("integrate_pn input involves " + x.vars()[i].name);
    if (e[*ia] == n) out += c;
  }
  return out;
}

}  // namespace thom
