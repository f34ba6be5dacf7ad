#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "thom/errors.hpp"
#include "thom/rational.hpp"

namespace thom {

struct Conflict {
  std::size_t row;                    // original index of the row reduced to 0 = b != 0
  std::vector<std::size_t> partners;  // original pivot rows combined into it
};

template <class T>
struct Elimination {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;  // original row index of each pivot
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> free_cols;
  std::optional<Conflict> conflict;
  std::vector<T> solution;  // free columns set to zero; empty when inconsistent

  bool consistent() const { return !conflict; }
  bool unique() const { return consistent() && free_cols.empty(); }
};

// Gauss-Jordan elimination of A x = b. Pivots are the first usable entry in
// column order; `ops` decides which entries are usable pivots and inverts them,
// so the same routine runs over Q and over polynomial entries with constant
// pivots.
//   ops.is_zero(x), ops.invertible(x), ops.inverse(x), ops.zero()
template <class T, class Ops>
Elimination<T> eliminate(std::vector<std::vector<T>> A, std::vector<T> b, std::size_t ncols, const Ops& ops) {
  const std::size_t nrows = A.size();
  if (b.size() != nrows) throw UsageError("rhs length differs from row count");
  std::vector<std::size_t> origin(nrows);
  std::vector<std::set<std::size_t>> used(nrows);
  for (std::size_t i = 0; i < nrows; ++i) {
    if (A[i].size() != ncols) throw UsageError("ragged matrix");
    origin[i] = i;
  }

  Elimination<T> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols; ++c) {
    std::optional<std::size_t> piv;
    bool nonzero_seen = false;
    for (std::size_t i = r; i < nrows; ++i) {
      if (ops.is_zero(A[i][c])) continue;
      nonzero_seen = true;
      if (ops.invertible(A[i][c])) {
        piv = i;
        break;
      }
    }
    if (!piv) {
      if (nonzero_seen) throw DomainError("no invertible pivot in column " + std::to_string(c));
      out.free_cols.push_back(c);
      continue;
    }
    std::swap(A[r], A[*piv]);
    std::swap(b[r], b[*piv]);
    std::swap(origin[r], origin[*piv]);
    std::swap(used[r], used[*piv]);

    T inv = ops.inverse(A[r][c]);
    for (std::size_t k = c; k < ncols; ++k) A[r][k] = A[r][k] * inv;
    b[r] = b[r] * inv;

    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || ops.is_zero(A[i][c])) continue;
      T f = A[i][c];
      for (std::size_t k = c; k < ncols; ++k)
        if (!ops.is_zero(A[r][k])) A[i][k] = A[i][k] - f * A[r][k];
      b[i] = b[i] - f * b[r];
      used[i].insert(origin[r]);
    }
    out.pivot_rows.push_back(origin[r]);
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;

  for (std::size_t i = r; i < nrows; ++i) {
    if (!ops.is_zero(b[i])) {
      out.conflict = Conflict{origin[i], std::vector<std::size_t>(used[i].begin(), used[i].end())};
      return out;
    }
  }

  out.solution.assign(ncols, ops.zero());
  for (std::size_t k = 0; k < r; ++k) out.solution[out.pivot_cols[k]] = b[k];
  return out;
}

struct RationalOps {
  bool is_zero(const Rational& x) const { return x.is_zero(); }
  bool invertible(const Rational& x) const { return !x.is_zero(); }
  Rational inverse(const Rational& x) const { return x.inverse(); }
  Rational zero() const { return Rational(0); }
};

}  // namespace thom
