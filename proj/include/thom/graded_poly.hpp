#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thom/rational.hpp"
#include "thom/var_table.hpp"

namespace thom {

using Exponents = std::vector<int>;

// Sparse polynomial over Q in the variables of a VarTable. Terms with zero
// coefficient are never stored. Values are immutable once built.
class GradedPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  GradedPoly() = default;
  explicit GradedPoly(VarTablePtr vars);

  static GradedPoly constant(VarTablePtr vars, const Rational& c);
  static GradedPoly variable(VarTablePtr vars, std::string_view name);
  static GradedPoly monomial(VarTablePtr vars, Exponents exps, const Rational& c = 1);

  const VarTablePtr& table() const { return vars_; }
  const VarTable& vars() const { return *vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  int term_degree(const Exponents& e) const { return vars_->weighted_degree(e); }
  std::optional<int> max_degree() const;
  std::optional<int> min_degree() const;
  bool is_homogeneous() const;
  bool is_homogeneous(int degree) const;  // zero is homogeneous of every degree

  GradedPoly part(int degree) const;
  GradedPoly truncate(int max_degree) const;
  Rational coefficient_of(const Exponents& e) const;
  Rational constant_term() const;
  int max_exponent(std::size_t var) const;
  // Terms with exponent `power` in `var`, with that exponent cleared.
  GradedPoly coefficient_in(std::size_t var, int power) const;
  bool integral_coefficients() const;

  GradedPoly pow(unsigned k) const;

  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  GradedPoly& operator*=(const GradedPoly& o);
  GradedPoly& operator*=(const Rational& c);

  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator*(GradedPoly a, const Rational& c) { return a *= c; }
  friend GradedPoly operator*(const Rational& c, GradedPoly a) { return a *= c; }
  GradedPoly operator-() const;

  // Mixing a polynomial with a bare scalar lifts the scalar to a constant.
  GradedPoly operator+(const Rational& c) const;
  GradedPoly operator-(const Rational& c) const;

  friend bool operator==(const GradedPoly& a, const GradedPoly& b);

  // Adds c * x^e in place; used by builders.
  void add_term(const Exponents& e, const Rational& c);

  std::string str() const;  // canonical rendering, see poly_text.hpp

 private:
  void require_same(const GradedPoly& o) const;

  VarTablePtr vars_;
  TermMap terms_;
};

// 1/p up to weighted degree max_degree; p must have constant term 1.
GradedPoly truncated_inverse(const GradedPoly& p, int max_degree);

// Exponent vectors of exact weighted degree `degree`, ordered by the index of
// the last variable used (ascending), then lexicographically descending.
// Weight-0 variables never occur.
std::vector<Exponents> monomial_basis(const VarTable& vars, int degree);

// Ordering used by monomial_basis and the canonical renderer.
bool basis_less(const Exponents& a, const Exponents& b);

using Bindings = std::map<std::string, GradedPoly>;

// Replaces each bound variable by its image. Unbound variables that occur in
// p are mapped to the same-named variable of `target`.
GradedPoly substitute(const GradedPoly& p, const Bindings& bindings, const VarTablePtr& target);
GradedPoly substitute(const GradedPoly& p, const Bindings& bindings);  // target from bindings

// Same polynomial re-expressed over another table by variable name.
GradedPoly embed(const GradedPoly& p, const VarTablePtr& target);

Rational coefficient_of(const GradedPoly& p, const Exponents& e);

}  // namespace thom
