/// @file index_set.hpp
/// @brief Strictly increasing index tuples packed as bit masks, with wedge-sign helpers.
#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace plectic {

/// {i_1 < ... < i_k} as a bit mask. Shared by form components and Λ^k g.
struct IndexSet {
  std::uint32_t bits = 0;

  static IndexSet of(const std::vector<int>& indices) {
    IndexSet s;
    for (int i : indices) s.bits |= (1U << i);
    return s;
  }
  static IndexSet single(int i) { return IndexSet{1U << i}; }

  int size() const { return std::popcount(bits); }
  bool contains(int i) const { return (bits >> i) & 1U; }
  bool empty() const { return bits == 0; }
  IndexSet without(int i) const { return IndexSet{bits & ~(1U << i)}; }
  IndexSet with(int i) const { return IndexSet{bits | (1U << i)}; }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint32_t b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// Number of members strictly below i.
  int count_below(int i) const { return std::popcount(bits & ((1U << i) - 1U)); }

  friend bool operator==(IndexSet a, IndexSet b) { return a.bits == b.bits; }

  /// Lexicographic order of the sorted tuples (for sets of equal size).
  friend bool operator<(IndexSet a, IndexSet b) {
    if (a.bits == b.bits) return false;
    std::uint32_t diff = a.bits ^ b.bits;
    std::uint32_t low = diff & (~diff + 1U);
    return (a.bits & low) != 0;
  }
};

/// Sign of dx^A ∧ dx^B relative to dx^{A∪B}; 0 when A and B overlap.
inline int wedge_sign(IndexSet a, IndexSet b) {
  if ((a.bits & b.bits) != 0) return 0;
  int inversions = 0;
  for (std::uint32_t rest = b.bits; rest != 0; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    inversions += std::popcount(a.bits >> (j + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

/// Subsets of {0..n-1} of size k in lexicographic order.
inline std::vector<IndexSet> subsets_of_size(int n, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    out.push_back(IndexSet::of(idx));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace plectic
