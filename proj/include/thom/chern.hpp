#pragma once

#include <optional>
#include <vector>

#include "thom/graded_poly.hpp"
#include "thom/quotient_ring.hpp"

namespace thom {

// c_1..c_rank of a bundle; classes[k-1] = c_k.
struct ChernVector {
  int rank = 0;
  std::vector<GradedPoly> classes;

  const GradedPoly& operator[](int k) const { return classes.at(k - 1); }
  GradedPoly total() const;  // 1 + c_1 + ... ; requires rank >= 1 or a table
  const VarTablePtr& table() const { return classes.at(0).table(); }

  // Degree-1..rank parts of a total Chern class.
  static ChernVector from_total(const GradedPoly& total, int rank);
  // Formal classes named prefix1..prefixrank (weights 1..rank) of `vars`.
  static ChernVector formal(const VarTablePtr& vars, const std::string& prefix, int rank);
};

// cbar_k = degree-k part of c(F) / c(E), k = 1..max_degree.
std::vector<GradedPoly> quotient_chern(const ChernVector& c, const ChernVector& c_target, int max_degree);

// Replaces cb1, cb2, ... by their (c, c') expansions; other variables are kept
// by name. Result is over chern_table(m, n).
GradedPoly expand_quotient_form(const GradedPoly& tp_in_cbar, int m, int n);

// Inverse of expand_quotient_form: rewrites tp (over chern_table(m, n)) in
// cb1..cbK when it lies in that subring, via c'_j = sum_i c_i cb_(j-i).
std::optional<GradedPoly> to_quotient_form(const GradedPoly& tp, int m, int n);

// Chern classes of (line with c_1 = ell) tensor W via the binomial formula;
// reduced in R when given.
ChernVector twist_chern(const GradedPoly& ell, const ChernVector& W, const QuotientRing* R = nullptr);

// c(gamma^* tensor V) on the flag ring of P^n, rank n-1. `base` names the
// hyperplane variable of R and `fiber` the tautological variable.
ChernVector flag_target_chern(const QuotientRing& R, int n, const std::string& base = "a",
                              const std::string& fiber = "t");
ChernVector flag_target_chern(int n);  // over projective_flag_ring(n)

}  // namespace thom
