#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bdim/poset.hpp"

namespace bdim {

/// A family of linear extensions whose intersection is the poset.
struct Realizer {
  std::vector<LinearOrder> extensions;

  std::size_t size() const { return extensions.size(); }
};

bool is_realizer(const Poset& poset, const Realizer& realizer);

/// Returns pairs (x_1, y_1) ... (x_k, y_k) from `pairs` with x_a <= y_{a+1}
/// cyclically, or nothing when the set is reversible. Throws
/// NotIncomparableError if a pair is not incomparable.
std::optional<std::vector<ElementPair>> find_alternating_cycle(const Poset& poset, const IncPairSet& pairs);

/// A linear extension placing y before x for every (x, y) in `pairs`; ties go
/// to the lowest index. Throws NotReversibleError carrying an alternating cycle.
LinearOrder reverse_set(const Poset& poset, const IncPairSet& pairs);

/// Incomparable (x, y) with D(x) a subset of D(y) and U(y) a subset of U(x).
/// A family of extensions is a realizer iff it reverses all of them.
IncPairSet critical_pairs(const Poset& poset);

/// A minimum-size realizer if the dimension is at most `max_dimension`.
std::optional<Realizer> minimum_realizer(const Poset& poset, std::size_t max_dimension);
std::optional<std::size_t> exact_dimension(const Poset& poset, std::size_t max_dimension);

/// Whether some s linear orders give every ordered pair a bit string from
/// which comparability can be read. Guarded to n <= 6, s <= 3 (BudgetError).
bool exact_bdim_at_most(const Poset& poset, std::size_t s);

bool cover_graph_is_forest(const Poset& poset);

/// Realizer of size at most 3 for a poset whose cover graph is a forest.
/// Throws NotForestError otherwise.
Realizer forest_realizer3(const Poset& poset);

}  // namespace bdim
