/// @file linear_solve.hpp
/// @brief Exact Gaussian elimination over a field (Rational or RationalFunction).
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "plectic/rational_function.hpp"

namespace plectic {

template <class T>
using Matrix = std::vector<std::vector<T>>;

inline bool field_is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool field_is_zero(const RationalFunction& f) { return f.is_zero(); }

/// Lower "cost" pivots are preferred; keeps rational-function growth down.
inline std::size_t pivot_cost(const Rational&) { return 0; }
inline std::size_t pivot_cost(const RationalFunction& f) {
  if (f.is_constant()) return 0;
  return f.numerator().terms().size() + f.denominator().terms().size();
}

template <class T>
struct Echelon {
  Matrix<T> rref;                   ///< reduced row echelon form (nonzero rows first)
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form; `cols` is needed when the matrix has no rows.
template <class T>
Echelon<T> row_reduce(Matrix<T> a, std::size_t cols) {
  Echelon<T> out;
  const std::size_t rows = a.size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (field_is_zero(a[i][c])) continue;
      if (best == rows || pivot_cost(a[i][c]) < pivot_cost(a[best][c])) best = i;
    }
    if (best == rows) continue;
    std::swap(a[r], a[best]);
    const T inv_pivot = T(a[r][c]);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] / inv_pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || field_is_zero(a[i][c])) continue;
      const T factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!field_is_zero(a[r][j])) a[i][j] = a[i][j] - factor * a[r][j];
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rref = std::move(a);
  return out;
}

/// Basis of {x : A x = 0}; `zero`/`one` carry the field's context (variables).
template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& a, std::size_t cols, const T& zero, const T& one) {
  Echelon<T> e = row_reduce(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(cols, zero);
    v[free] = one;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
struct LinearSolution {
  std::vector<T> particular;
  std::vector<std::vector<T>> kernel;
};

/// Solves A x = b. nullopt when inconsistent.
template <class T>
std::optional<LinearSolution<T>> solve_linear(const Matrix<T>& a, const std::vector<T>& b, std::size_t cols,
                                              const T& zero, const T& one) {
  Matrix<T> aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Echelon<T> e = row_reduce(aug, cols + 1);
  for (auto p : e.pivots) {
    if (p == cols) return std::nullopt;
  }
  LinearSolution<T> sol;
  sol.particular.assign(cols, zero);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) sol.particular[e.pivots[r]] = e.rref[r][cols];
  sol.kernel = nullspace(a, cols, zero, one);
  return sol;
}

/// Indices of a maximal linearly independent subset of the given vectors (greedy, in order).
template <class T>
std::vector<std::size_t> independent_subset(const std::vector<std::vector<T>>& vectors, std::size_t length) {
  std::vector<std::size_t> chosen;
  Matrix<T> rows;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    rows.push_back(vectors[i]);
    std::size_t r = row_reduce(rows, length).rank();
    if (r > rank) {
      rank = r;
      chosen.push_back(i);
    } else {
      rows.pop_back();
    }
  }
  return chosen;
}

}  // namespace plectic
