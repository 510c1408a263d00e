#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bdim/errors.hpp"

namespace bdim {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

// Sorted, duplicate-free list of ground-set elements.
using ElementSet = std::vector<ElementId>;

/// A finite strict partial order on the ground set {0, ..., n-1}.
///
/// The relation is stored densely: one bitset row of strict successors and
/// one of strict predecessors per element. Values are immutable once built.
class Poset {
 public:
  /// The antichain on n elements.
  explicit Poset(std::size_t n = 1);

  /// Transitive closure of `relations`. Throws CycleError if the closure is
  /// not irreflexive.
  static Poset from_relations(std::size_t n, std::span<const ElementPair> relations);

  std::size_t size() const { return up_.size(); }

  bool less(ElementId x, ElementId y) const { return up_[x][y]; }
  bool less_equal(ElementId x, ElementId y) const { return x == y || up_[x][y]; }
  bool comparable(ElementId x, ElementId y) const { return up_[x][y] || up_[y][x]; }
  bool incomparable(ElementId x, ElementId y) const { return x != y && !comparable(x, y); }

  /// Strict up-set and down-set of x.
  const Bitset& above(ElementId x) const { return up_[x]; }
  const Bitset& below(ElementId x) const { return down_[x]; }

  std::size_t relation_count() const;

  /// The subposet on `elements`; element elements[k] becomes k.
  Poset induced(std::span<const ElementId> elements) const;

  bool operator==(const Poset& other) const { return up_ == other.up_; }

 private:
  explicit Poset(std::vector<Bitset> up);

  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
};

/// A duplicate-free sequence over a subset of the ground set.
class LinearOrder {
 public:
  LinearOrder() = default;
  explicit LinearOrder(std::vector<ElementId> elements);

  const std::vector<ElementId>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  bool contains(ElementId x) const {
    return x < positions_.size() && positions_[x] != kAbsent;
  }
  /// Throws SupportError when x is not in the support.
  std::size_t position(ElementId x) const;
  bool before(ElementId x, ElementId y) const { return position(x) < position(y); }

  ElementSet support() const;
  LinearOrder reversed() const;

  bool operator==(const LinearOrder& other) const { return elements_ == other.elements_; }

 private:
  static constexpr std::uint32_t kAbsent = UINT32_MAX;

  std::vector<ElementId> elements_;
  std::vector<std::uint32_t> positions_;
};

/// Ordered pairs of distinct incomparable elements.
struct IncPairSet {
  std::vector<ElementPair> pairs;

  bool empty() const { return pairs.empty(); }
  std::size_t size() const { return pairs.size(); }
  /// True when (y, x) is present for every (x, y).
  bool is_symmetric() const;
};

Poset poset_from_relations(std::size_t n, std::span<const ElementPair> relations);
Poset dual(const Poset& poset);

/// Pairs (y, x) where x covers y.
std::vector<ElementPair> cover_pairs(const Poset& poset);
IncPairSet incomparable_pairs(const Poset& poset);

/// Minimal a_0..a_{n-1} are elements 0..n-1, maximal b_j are n+j,
/// with a_i < b_j exactly when i != j.
Poset standard_example(std::size_t n);

bool is_chain(const Poset& poset);
bool is_antichain(const Poset& poset);

/// Subsequence of `order` on the members of `subset`.
LinearOrder restrict(const LinearOrder& order, std::span<const ElementId> subset);

/// [A_1 < A_2 < ... < A_s]. Throws OverlapError on shared elements.
LinearOrder concat(std::span<const LinearOrder> parts);

/// Merges [A < w < B] with [C < w < D] into [A < C < w < D < B].
/// Throws BadIntersectionError unless the supports meet exactly in {w}.
LinearOrder merge_at_cut(const LinearOrder& outer, const LinearOrder& inner, ElementId w);

/// Whether `order` respects every relation of `poset` among its support.
bool is_linear_extension(const Poset& poset, const LinearOrder& order);

/// Topological sort taking the lowest available index first.
LinearOrder lowest_first_extension(const Poset& poset);

}  // namespace bdim
