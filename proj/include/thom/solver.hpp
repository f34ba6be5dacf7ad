#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "thom/graded_poly.hpp"
#include "thom/registry.hpp"

namespace thom {

struct Ansatz {
  const SingularityType* target = nullptr;
  VarTablePtr vars;              // chern_table(m, n)
  std::vector<Exponents> basis;  // x_1..x_N multiply these monomials
  std::size_t size() const { return basis.size(); }
  GradedPoly monomial(std::size_t i) const { return GradedPoly::monomial(vars, basis[i]); }
  GradedPoly assemble(const std::vector<Rational>& x) const;
};

Ansatz make_ansatz(const SingularityType& target);

struct TorusBindings {
  VarTablePtr torus;  // "a" for rank 1, a1..ar otherwise
  Bindings bindings;  // c_i and cp_j in torus variables
};

// c_i -> degree-i part of prod(1 + <w,a>) over source weights, c'_j likewise
// over target weights, both truncated at degree s.
TorusBindings torus_substitution(const SingularityType& t, int s);
VarTablePtr torus_table(int rank);
GradedPoly euler_class(const SingularityType& t);  // prod of <w,a> over normal weights

struct Equation {
  std::string label;  // "p" (principal) or g01, g02, ...
  std::string source;  // type producing the row
  std::string role;    // "principal" or "homogeneous"
  Exponents torus_monomial;
  std::string torus_text;
  std::vector<Rational> coeffs;
  Rational rhs;

  std::string str() const;  // "8x1 + 2x2 + ... = 2"
};

struct SolverError : std::runtime_error {
  enum class Kind { NotSolvable, ModulusDirection, Inconsistent, Underdetermined, NonIntegral };
  SolverError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  Kind kind;
};

// Rows come out with zero rows dropped, duplicates removed and sorted by the
// coefficient vector compared from the last unknown backwards.
std::vector<Equation> principal_equation(const Ansatz& ansatz, const SingularityType& target);
std::vector<Equation> homogeneous_equations(const Ansatz& ansatz, const SingularityType& lower);

struct SolveReport {
  std::string target;
  std::pair<int, int> pair;
  std::vector<std::string> basis;
  std::vector<std::string> constraints;
  std::vector<Equation> equations;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
  bool consistent = false;
  bool unique = false;
  std::size_t kernel_dim = 0;
  std::vector<std::string> pivot_rows;
  std::optional<std::string> conflict;
  std::vector<Rational> solution;
  std::optional<GradedPoly> tp;
  bool integral = false;
  bool verified = false;  // A x = b re-checked on every row
};

struct SolveResult {
  GradedPoly tp;
  SolveReport report;
};

// Default constraints: all registry types of the same pair with codim <= target
// codim, except the target itself.
std::vector<const SingularityType*> default_constraints(const Registry& reg, const SingularityType& target);

// Builds and solves the system. Errors carry the partial report.
struct SolveFailure : SolverError {
  SolveFailure(Kind k, const std::string& msg, SolveReport r) : SolverError(k, msg), report(std::move(r)) {}
  SolveReport report;
};

SolveResult solve_tp(const SingularityType& target, const std::vector<const SingularityType*>& constraints);
SolveResult solve_tp(const Registry& reg, const SingularityType& target);

struct Residual {
  std::string type;
  GradedPoly value;  // tp under the type's torus bindings, minus the Euler class when principal
  bool principal = false;
};

struct ConsistencyReport {
  std::vector<Residual> residuals;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// tp must vanish at every lower type. With `target` given and free of moduli,
// tp at the target must also equal its Euler class.
ConsistencyReport consistency_check(const GradedPoly& tp, const std::vector<const SingularityType*>& lower_types,
                                    const SingularityType* target = nullptr);

// tp evaluated at a type's torus bindings.
GradedPoly restrict_to(const GradedPoly& tp, const SingularityType& t);

}  // namespace thom
