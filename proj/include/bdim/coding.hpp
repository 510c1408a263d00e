#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bdim/boolean_realizer.hpp"
#include "bdim/poset.hpp"

namespace bdim {

/// ceil(log2 t), with 0 for t <= 1.
std::size_t code_length(std::size_t t);

/// Two orders over elements 0..n-1, where coloring[x] is the colour of x.
/// The colour classes appear in ascending colour order, forward in the first
/// order and internally reversed in the second.
std::vector<LinearOrder> lemma1_family(std::span<const std::size_t> coloring);

/// Same colour iff the two bits differ.
inline bool lemma1_same(bool first, bool second) { return first != second; }

/// 4r orders from codes in [0, 2^r): element x carries the subset of [r]
/// given by the binary digits of codes[x]. The base order is ascending index.
std::vector<LinearOrder> lemma2_orders(std::span<const std::size_t> codes, std::size_t r);

/// Reads the code pair back from bits[offset, offset + 4r). Nothing when a
/// group of four bits is not one of the realizable patterns or a code
/// reaches `t`.
std::optional<std::pair<std::size_t, std::size_t>> lemma2_decode(const Bits& bits, std::size_t offset,
                                                                 std::size_t r, std::size_t t);

/// Four-orders-per-bit family for arbitrary colour labels: labels are numbered by first
/// appearance over ascending element index.
struct Lemma2Family {
  std::vector<LinearOrder> orders;
  std::size_t r = 0;
  std::vector<std::size_t> labels;  // code -> colour label

  std::optional<std::pair<std::size_t, std::size_t>> decode(const Bits& bits, std::size_t offset = 0) const;
};

Lemma2Family lemma2_family(std::span<const std::size_t> coloring);

/// Subsets of {0..size-1} separating every ordered pair: the binary-digit
/// sets of each of the r = ceil(log2 size) positions, then their complements.
struct SeparatingFamily {
  std::size_t ground = 0;
  std::vector<std::vector<bool>> subsets;

  std::size_t size() const { return subsets.size(); }
  bool contains(std::size_t j, std::size_t a) const { return subsets[j][a]; }
  /// First j with a in S_j and b not in S_j.
  std::size_t first_separating(std::size_t a, std::size_t b) const;
};

SeparatingFamily separating_family(std::size_t size);

}  // namespace bdim
