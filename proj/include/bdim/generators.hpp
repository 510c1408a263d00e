#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "bdim/poset.hpp"

namespace bdim {

using Rng = std::mt19937_64;

/// Each pair i < j of a random permutation is related with probability p,
/// then closed transitively.
Poset random_poset(std::size_t n, double p, Rng& rng);

/// Random poset whose cover graph is connected (rejection sampling).
Poset random_connected_poset(std::size_t n, double p, Rng& rng);

/// Cover graph is a forest: random trees with random edge orientations.
/// A new vertex starts a fresh tree with probability `split`.
Poset random_forest_poset(std::size_t n, double split, Rng& rng);

/// A random poset on k elements whose cover graph is 2-connected (k >= 4),
/// or a 2-chain for k = 2.
Poset random_block(std::size_t k, Rng& rng);

/// Exactly `t` blocks of sizes drawn from {2, 4, ..., max_block}, each glued
/// at a random existing element; labels are shuffled at the end.
Poset block_glue(std::size_t t, std::size_t max_block, Rng& rng);

Poset relabel(const Poset& poset, const std::vector<ElementId>& image);
Poset shuffle_labels(const Poset& poset, Rng& rng);

/// Disjoint sum; parts keep their order in the ground set.
Poset disjoint_sum(const std::vector<Poset>& parts);

}  // namespace bdim
