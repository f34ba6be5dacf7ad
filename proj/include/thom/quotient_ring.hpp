#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thom/graded_poly.hpp"

namespace thom {

// Terms whose weighted degree restricted to `vars` exceeds `max_degree` vanish.
struct Truncation {
  std::vector<std::size_t> vars;
  int max_degree = 0;
};

// Monic relation t^rho + b_1 t^(rho-1) + ... + b_rho = 0 with b_i free of t.
struct FiberRelation {
  std::size_t var = 0;
  int rho = 0;
  std::vector<GradedPoly> coeffs;  // b_1..b_rho
};

class QuotientRing {
 public:
  QuotientRing(VarTablePtr vars, std::vector<Truncation> truncations,
               std::optional<FiberRelation> relation = std::nullopt);

  const VarTablePtr& table() const { return vars_; }
  const std::vector<Truncation>& truncations() const { return truncs_; }
  const std::optional<FiberRelation>& relation() const { return rel_; }
  int rho() const { return rel_ ? rel_->rho : 0; }

  bool truncated(const Exponents& e) const;
  GradedPoly truncate(const GradedPoly& x) const;
  // Unique normal form: t-degree < rho and every truncation bound respected.
  GradedPoly reduce(const GradedPoly& x) const;

  GradedPoly var(std::string_view name) const { return GradedPoly::variable(vars_, name); }
  GradedPoly one() const { return GradedPoly::constant(vars_, 1); }
  GradedPoly zero() const { return GradedPoly(vars_); }

 private:
  VarTablePtr vars_;
  std::vector<Truncation> truncs_;
  std::optional<FiberRelation> rel_;
};

// Flag ring of P^n realised as P(Q): relation coefficients b_i = c_i(Q) = base^i
// (from c(Q) = 1/(1 - base)), fiber exponent rho = n = rank Q. `base` is the
// hyperplane variable ("a", or "h" when pulled back to a source manifold).
// Truncations are supplied by the caller.
QuotientRing flag_ring(VarTablePtr vars, const std::string& base, const std::string& fiber, int n,
                       std::vector<Truncation> truncations);

// Z[a,t]/<a^(n+1), t^n + a t^(n-1) + ... + a^n>.
QuotientRing projective_flag_ring(int n);

// Q[a]/<a^(n+1)>.
QuotientRing projective_ring(int n);

// Reduce, keep the coefficient of t^(rho-1), drop the rest. Linear over
// everything except t.
GradedPoly gysin_pushforward(const GradedPoly& x, const QuotientRing& R);

// Coefficient of a^n; x must involve only a.
Rational integrate_pn(const GradedPoly& x, int n);

}  // namespace thom
