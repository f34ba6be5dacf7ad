#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thom/chern.hpp"
#include "thom/errors.hpp"
#include "thom/graded_poly.hpp"
#include "thom/quotient_ring.hpp"

namespace thom {

struct EmptyLocus : DomainError {
  using DomainError::DomainError;
};

enum class Pipeline { P3Surface, P4Surface, P4Primal };
Pipeline parse_pipeline(const std::string& name);  // throws UnknownName
std::string pipeline_name(Pipeline p);

// One enumerative pipeline: source of dimension m mapped to P^n, flag ring of
// pairs (point, line) pulled back to the source.
struct PushforwardSpec {
  Pipeline pipeline;
  int n = 0;    // ambient P^n
  int m = 0;    // source dimension
  int rho = 0;  // fiber exponent of P(Q), = n
  VarTablePtr flag_vars;  // surfaces: c1 c2 h t d xi1 xi2 xi01; primal: a t d
  VarTablePtr push_vars;  // a d xi1 xi2 xi01 (surfaces), a d (primal)
  QuotientRing flag;      // with dimension truncation on the source classes
  std::optional<ChernVector> tangent;  // explicit c(TX) for the primal

  int flag_dimension() const { return m + n - 1; }
};

PushforwardSpec make_spec(Pipeline p);

// c <- c(TM) (formal or explicit), c' <- c(gamma^* tensor V); reduced.
GradedPoly locus_class(const GradedPoly& tp, const PushforwardSpec& spec);
GradedPoly flag_pushdown(const GradedPoly& x, const PushforwardSpec& spec);
// f_*: c-monomials to characters times powers of a, projection formula for h.
GradedPoly xi_pushforward(const GradedPoly& x, const PushforwardSpec& spec);
// f^*: a -> h.
GradedPoly pullback(const GradedPoly& y, const PushforwardSpec& spec);

// lambda of f_*(class) = lambda a^k, over char_table("surface") or ("primal").
GradedPoly locus_degree(const GradedPoly& tp, const PushforwardSpec& spec);
GradedPoly locus_degree(const GradedPoly& tp, Pipeline p);

struct OrdinaryFormulas {
  GradedPoly C, T, eps0;  // in d, xi1, xi2, xi01
};
OrdinaryFormulas stable_multisingularity_chars();

// xi in terms of (d, eps0, C, T) obtained by solving the OrdinaryFormulas
// system exactly over Q[d].
struct CharacterConversion {
  GradedPoly xi1, xi2, xi01;                  // over char_table("ordinary")
  bool round_trip_ordinary = false;           // C, T, eps0 recovered identically
  bool round_trip_surface = false;            // xi recovered identically
};
CharacterConversion solve_character_conversion();

GradedPoly ordinary_table(const GradedPoly& surface_formula);  // into (d, eps0, C, T)

struct SurfaceChars {
  GradedPoly d, xi1, xi2, xi01;
};
// Smooth complete intersection of degrees d1, d2 in P^4, over char_table("ci").
SurfaceChars complete_intersection_chars();
GradedPoly specialize(const GradedPoly& surface_formula, const SurfaceChars& chars);

// Replaces character names by numbers; all variables must be bound.
Rational evaluate_characters(const GradedPoly& formula, const std::map<std::string, Rational>& values);

}  // namespace thom
