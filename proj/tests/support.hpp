#pragma once

// Generators and independent oracles shared by the test binaries.

#include <algorithm>
#include <random>
#include <vector>

#include "thom/graded_poly.hpp"

namespace testsupport {

using thom::Exponents;
using thom::GradedPoly;
using thom::Rational;

// Small random rationals, mostly integers.
inline Rational random_rational(std::mt19937& rng, int span = 5) {
  std::uniform_int_distribution<int> num(-span, span), den(1, 3), pick(0, 3);
  return pick(rng) == 0 ? Rational(num(rng), den(rng)) : Rational(num(rng));
}

// Random polynomial with weighted degree <= max_degree, at most `terms` terms.
inline GradedPoly random_poly(std::mt19937& rng, const thom::VarTablePtr& vars, int max_degree, int terms = 5) {
  GradedPoly p(vars);
  std::uniform_int_distribution<int> count(0, terms);
  std::uniform_int_distribution<int> deg(0, max_degree);
  int k = count(rng);
  for (int i = 0; i < k; ++i) {
    Exponents e(vars->size(), 0);
    int budget = deg(rng);
    for (int tries = 0; tries < 8 && budget > 0; ++tries) {
      std::uniform_int_distribution<std::size_t> which(0, vars->size() - 1);
      std::size_t v = which(rng);
      int w = (*vars)[v].weight;
      if (w == 0) {
        e[v] += 1;
      } else if (w <= budget) {
        e[v] += 1;
        budget -= w;
      }
    }
    p.add_term(e, random_rational(rng));
  }
  return p;
}

// Numeric evaluation straight from the term map.
inline Rational evaluate(const GradedPoly& p, const std::vector<Rational>& point) {
  Rational s = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t = t * point[i];
    s = s + t;
  }
  return s;
}

inline std::vector<Rational> random_point(std::mt19937& rng, std::size_t n) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_rational(rng, 7));
  return v;
}

// Elementary symmetric functions e_1..e_k of numbers.
inline std::vector<Rational> elementary(const std::vector<Rational>& roots, int k) {
  std::vector<Rational> e(k + 1, Rational(0));
  e[0] = 1;
  for (const auto& r : roots)
    for (int j = k; j >= 1; --j) e[j] = e[j] + e[j - 1] * r;
  return e;
}

// Exponent vectors of weighted degree `degree` by exhaustive search, sorted
// with an independent implementation of the basis order.
inline std::vector<Exponents> brute_basis(const thom::VarTable& vars, int degree) {
  std::vector<Exponents> out;
  std::vector<std::size_t> graded;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i].weight > 0) graded.push_back(i);
  Exponents e(vars.size(), 0);
  std::vector<int> bound;
  for (auto i : graded) bound.push_back(degree / vars[i].weight);
  while (true) {
    int d = 0;
    for (std::size_t j = 0; j < graded.size(); ++j) d += e[graded[j]] * vars[graded[j]].weight;
    if (d == degree) out.push_back(e);
    std::size_t j = 0;
    for (; j < graded.size(); ++j) {
      if (e[graded[j]] < bound[j]) {
        ++e[graded[j]];
        break;
      }
      e[graded[j]] = 0;
    }
    if (j == graded.size()) break;
  }
  auto last = [](const Exponents& x) {
    int l = -1;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i]) l = static_cast<int>(i);
    return l;
  };
  std::sort(out.begin(), out.end(), [&](const Exponents& a, const Exponents& b) {
    if (last(a) != last(b)) return last(a) < last(b);
    return b < a;
  });
  return out;
}

}  // namespace testsupport
