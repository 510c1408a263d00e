#include "bdim/generators.hpp"

#include <algorithm>
#include <numeric>

#include "bdim/decomposition.hpp"

namespace bdim {

namespace {

std::vector<ElementPair> relations_of(const Poset& poset, std::size_t shift = 0) {
  std::vector<ElementPair> rel;
  for (ElementId x = 0; x < poset.size(); ++x) {
    const auto& row = poset.above(x);
    for (auto y = row.find_first(); y != Bitset::npos; y = row.find_next(y)) {
      rel.emplace_back(static_cast<ElementId>(x + shift), static_cast<ElementId>(y + shift));
    }
  }
  return rel;
}

}  // namespace

Poset random_poset(std::size_t n, double p, Rng& rng) {
  std::vector<ElementId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(p);
  std::vector<ElementPair> rel;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) rel.emplace_back(perm[i], perm[j]);
    }
  }
  return Poset::from_relations(n, rel);
}

Poset random_connected_poset(std::size_t n, double p, Rng& rng) {
  while (true) {
    Poset candidate = random_poset(n, p, rng);
    if (components(candidate).size() == 1) return candidate;
  }
}

Poset random_forest_poset(std::size_t n, double split, Rng& rng) {
  std::bernoulli_distribution fresh(split), up(0.5);
  std::vector<ElementPair> rel;
  for (ElementId v = 1; v < n; ++v) {
    if (fresh(rng)) continue;
    const auto parent = std::uniform_int_distribution<ElementId>(0, v - 1)(rng);
    rel.push_back(up(rng) ? ElementPair{parent, v} : ElementPair{v, parent});
  }
  return shuffle_labels(Poset::from_relations(n, rel), rng);
}

Poset random_block(std::size_t k, Rng& rng) {
  if (k == 2) return Poset::from_relations(2, std::vector<ElementPair>{{0, 1}});
  if (k < 4) throw Error("no block has exactly " + std::to_string(k) + " elements and a cycle");
  std::uniform_real_distribution<double> density(0.3, 0.7);
  while (true) {
    Poset candidate = random_poset(k, density(rng), rng);
    const auto blocks = graph_blocks(cover_graph(candidate));
    if (blocks.size() == 1 && blocks.front().size() == k) return candidate;
  }
}

Poset block_glue(std::size_t t, std::size_t max_block, Rng& rng) {
  if (t == 0) throw Error("need at least one block");
  if (max_block < 2) throw Error("blocks need at least two elements");
  std::vector<std::size_t> sizes{2};
  for (std::size_t k = 4; k <= max_block; ++k) sizes.push_back(k);
  std::uniform_int_distribution<std::size_t> pick_size(0, sizes.size() - 1);

  std::size_t n = 0;
  std::vector<ElementPair> rel;
  for (std::size_t b = 0; b < t; ++b) {
    const Poset block = random_block(sizes[pick_size(rng)], rng);
    // Block element 0 lands on an existing element; the rest are new.
    std::vector<ElementId> image(block.size());
    if (n == 0) {
      std::iota(image.begin(), image.end(), 0);
      n = block.size();
    } else {
      image[0] = std::uniform_int_distribution<ElementId>(0, static_cast<ElementId>(n - 1))(rng);
      for (std::size_t a = 1; a < block.size(); ++a) image[a] = static_cast<ElementId>(n++);
    }
    for (const auto& [x, y] : relations_of(block)) rel.emplace_back(image[x], image[y]);
  }
  return shuffle_labels(Poset::from_relations(n, rel), rng);
}

Poset relabel(const Poset& poset, const std::vector<ElementId>& image) {
  std::vector<ElementPair> rel;
  for (const auto& [x, y] : relations_of(poset)) rel.emplace_back(image[x], image[y]);
  return Poset::from_relations(poset.size(), rel);
}

Poset shuffle_labels(const Poset& poset, Rng& rng) {
  std::vector<ElementId> image(poset.size());
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  return relabel(poset, image);
}

Poset disjoint_sum(const std::vector<Poset>& parts) {
  std::size_t n = 0;
  std::vector<ElementPair> rel;
  for (const auto& part : parts) {
    for (const auto& pair : relations_of(part, n)) rel.push_back(pair);
    n += part.size();
  }
  return Poset::from_relations(n, rel);
}

}  // namespace bdim
