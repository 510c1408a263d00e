#include <algorithm>
#include <deque>
#include <set>
#include <vector>

#include "doctest.h"

#include "bdim/decomposition.hpp"
#include "bdim/generators.hpp"

using namespace bdim;

namespace {

Poset from(std::size_t n, std::vector<ElementPair> rel) { return Poset::from_relations(n, rel); }

std::vector<Poset> glued_instances(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<Poset> out;
  for (int k = 0; k < count; ++k) out.push_back(block_glue(2 + k % 7, 7, rng));
  return out;
}

std::vector<std::size_t> distances(const CoverGraph& g, ElementId from) {
  std::vector<std::size_t> dist(g.n, g.n);
  std::deque<ElementId> queue = {from};
  dist[from] = 0;
  while (!queue.empty()) {
    const ElementId a = queue.front();
    queue.pop_front();
    for (ElementId b : g.adjacency[a]) {
      if (dist[b] == g.n) {
        dist[b] = dist[a] + 1;
        queue.push_back(b);
      }
    }
  }
  return dist;
}

// Vertices whose removal disconnects x from y, plus x or y when removing
// them splits the graph at all.
std::set<ElementId> cut_oracle(const CoverGraph& g, ElementId x, ElementId y) {
  auto reach_without = [&](ElementId start, ElementId removed) {
    std::vector<char> seen(g.n, 0);
    std::deque<ElementId> queue = {start};
    seen[start] = 1;
    while (!queue.empty()) {
      const ElementId a = queue.front();
      queue.pop_front();
      for (ElementId b : g.adjacency[a]) {
        if (b != removed && !seen[b]) {
          seen[b] = 1;
          queue.push_back(b);
        }
      }
    }
    return seen;
  };
  std::set<ElementId> out;
  for (ElementId c = 0; c < g.n; ++c) {
    if (c == x || c == y) {
      if (g.adjacency[c].size() < 2) continue;
      const auto seen = reach_without(g.adjacency[c].front(), c);
      for (ElementId b : g.adjacency[c]) {
        if (!seen[b]) {
          out.insert(c);
          break;
        }
      }
    } else if (!reach_without(x, c)[y]) {
      out.insert(c);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("cover graph and components") {
  const Poset chain3 = from(3, {{0, 1}, {1, 2}});
  CHECK(cover_graph(chain3).edges() == std::vector<ElementPair>{{0, 1}, {1, 2}});
  CHECK(cover_graph(Poset(3)).edges().empty());
  // S_3: K_{3,3} minus a perfect matching.
  const auto s3 = cover_graph(standard_example(3));
  CHECK(s3.edges().size() == 6);
  for (ElementId i = 0; i < 3; ++i) CHECK(std::count(s3.adjacency[i].begin(), s3.adjacency[i].end(), 3 + i) == 0);

  CHECK(components(chain3).size() == 1);
  const Poset chain_and_two = from(5, {{0, 1}, {1, 2}});
  CHECK(components(chain_and_two).size() == 3);

  Rng rng(2);
  for (int k = 0; k < 100; ++k) {
    std::vector<Poset> parts;
    const std::size_t count = 1 + k % 5;
    for (std::size_t c = 0; c < count; ++c) parts.push_back(random_connected_poset(1 + rng() % 6, 0.5, rng));
    CHECK(components(shuffle_labels(disjoint_sum(parts), rng)).size() == count);
  }
}

TEST_CASE("block labelling of small posets") {
  const auto chain = block_decomposition(from(3, {{0, 1}, {1, 2}}));
  REQUIRE(chain.size() == 2);
  CHECK(chain.blocks[0] == ElementSet{0, 1});
  CHECK(chain.blocks[1] == ElementSet{1, 2});
  CHECK(chain.root(1) == 1);
  CHECK(chain.zparts[1] == ElementSet{2});

  const auto diamond = block_decomposition(from(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  CHECK(diamond.size() == 1);
  CHECK_FALSE(diamond.roots[0].has_value());

  CHECK_THROWS_AS(block_decomposition(Poset(2)), DisconnectedError);
}

TEST_CASE("Z-parts partition the ground set and roots come earlier") {
  for (const Poset& p : glued_instances(7, 60)) {
    for (std::size_t first = 0; first < 2; ++first) {
      const auto blocks = graph_blocks(cover_graph(p));
      if (first >= blocks.size()) continue;
      const auto bd = block_decomposition(p, first);
      std::vector<int> hits(p.size(), 0);
      for (std::size_t i = 0; i < bd.size(); ++i) {
        for (ElementId x : bd.zparts[i]) {
          ++hits[x];
          CHECK(bd.zindex[x] == i);
        }
        if (i == 0) {
          CHECK(bd.zparts[0] == bd.blocks[0]);
          continue;
        }
        CHECK(bd.zindex[bd.root(i)] < i);
        CHECK(bd.parent[i] == bd.zindex[bd.root(i)]);
        const auto before = bd.prefix(i - 1);
        std::vector<ElementId> common;
        std::set_intersection(before.begin(), before.end(), bd.blocks[i].begin(), bd.blocks[i].end(),
                              std::back_inserter(common));
        CHECK(common == ElementSet{bd.root(i)});
        CHECK(bd.prefix(i).size() == before.size() + bd.zparts[i].size());
      }
      CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    }
  }
}

TEST_CASE("root digraph and Q") {
  const Poset diamond = from(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  const auto single = block_decomposition(diamond);
  CHECK(root_digraph(diamond, single).edges.empty());
  CHECK(q_poset(root_digraph(diamond, single)).relation_count() == 0);

  // Two diamonds sharing 3, the second entirely above it.
  const Poset two = from(7, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 6}});
  const auto bd = block_decomposition(two);
  REQUIRE(bd.size() == 2);
  const auto rd = root_digraph(two, bd);
  CHECK(rd.edges.size() == 3);
  for (const auto& [a, b] : rd.edges) CHECK(a == 3);

  for (const Poset& p : glued_instances(9, 80)) {
    const auto d = block_decomposition(p);
    const Poset q = q_poset(root_digraph(p, d));
    for (ElementId x = 0; x < p.size(); ++x) {
      for (ElementId y = 0; y < p.size(); ++y) {
        if (q.less(x, y)) CHECK(p.less(x, y));
      }
    }
    CHECK(cover_pairs(q).size() <= p.size() - 1);
  }
}

TEST_CASE("block tree and depth-first orders") {
  const auto path = block_decomposition(from(4, {{0, 1}, {1, 2}, {2, 3}}));
  const auto [ltr, rtl] = dfs_orders(block_tree(path));
  CHECK(ltr == rtl);

  // Centre 0 with leaves 1..4: Z_1 = {0, 1} and three children hanging at 0.
  const auto star = block_decomposition(from(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
  const auto tree = block_tree(star);
  CHECK(tree.children[0] == std::vector<std::size_t>{1, 2, 3});
  const auto [left, right] = dfs_orders(tree);
  CHECK(left == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(right == std::vector<std::size_t>{0, 3, 2, 1});

  for (const Poset& p : glued_instances(13, 40)) {
    const auto bd = block_decomposition(p);
    const auto [a, b] = dfs_orders(block_tree(bd));
    for (const auto* seq : {&a, &b}) {
      auto sorted = *seq;
      std::sort(sorted.begin(), sorted.end());
      std::vector<std::size_t> expected(bd.size());
      for (std::size_t i = 0; i < expected.size(); ++i) expected[i] = i;
      CHECK(sorted == expected);
      CHECK(seq->front() == 0);
    }
  }
}

TEST_CASE("pair classification") {
  for (const Poset& p : glued_instances(19, 40)) {
    const auto bd = block_decomposition(p);
    const auto tree = block_tree(bd);
    for (ElementId x = 0; x < p.size(); ++x) {
      for (ElementId y = 0; y < p.size(); ++y) {
        if (x == y) continue;
        if (bd.zindex[x] == bd.zindex[y]) {
          CHECK_THROWS_AS(classify_pair(bd, tree, x, y), SameZError);
          continue;
        }
        const PairCase c = classify_pair(bd, tree, x, y);
        const PairCase mirror = classify_pair(bd, tree, y, x);
        if (bd.zindex[x] == 0) CHECK(c == PairCase::XBelowY);
        switch (c) {
          case PairCase::XBelowY: CHECK(mirror == PairCase::YBelowX); break;
          case PairCase::YBelowX: CHECK(mirror == PairCase::XBelowY); break;
          case PairCase::XLeftOfY: CHECK(mirror == PairCase::YLeftOfX); break;
          case PairCase::YLeftOfX: CHECK(mirror == PairCase::XLeftOfY); break;
        }
      }
    }
  }
}

TEST_CASE("tails") {
  const Poset chain = from(3, {{0, 1}, {1, 2}});
  const auto bd = block_decomposition(chain);
  CHECK(tail(chain, bd, 0, 0) == ElementSet{0});
  CHECK(tail(chain, bd, 1, 0) == ElementSet{1, 2});

  for (const Poset& p : glued_instances(23, 40)) {
    const auto d = block_decomposition(p);
    for (std::size_t i = 0; i < d.size(); ++i) {
      for (ElementId u : d.blocks[i]) {
        const auto t = tail(p, d, u, i);
        CHECK(std::binary_search(t.begin(), t.end(), u));
        for (ElementId v : d.blocks[i]) {
          if (v == u) continue;
          const auto tv = tail(p, d, v, i);
          const bool u_in_v = std::binary_search(tv.begin(), tv.end(), u);
          const bool v_in_u = std::binary_search(t.begin(), t.end(), v);
          if (!u_in_v && !v_in_u) {
            std::vector<ElementId> common;
            std::set_intersection(t.begin(), t.end(), tv.begin(), tv.end(), std::back_inserter(common));
            CHECK(common.empty());
          }
        }
      }
    }
  }
}

TEST_CASE("cut sets and the (i, u, v) triple") {
  const Poset chain = from(3, {{0, 1}, {1, 2}});
  CHECK(cut_set(chain, 0, 2) == ElementSet{1});
  const auto bd = block_decomposition(chain);
  const auto t = iuv(bd, block_tree(bd), 0, 2);
  CHECK(t.u == 1);
  CHECK(t.v == 1);

  // Path 3-1-0-2-4: x = 3 and y = 4 hang off different children of Z_1.
  const Poset path = from(5, {{3, 1}, {1, 0}, {0, 2}, {2, 4}});
  CHECK(cut_set(path, 3, 4) == ElementSet{0, 1, 2});
  const auto pd = block_decomposition(path);
  const auto branch = iuv(pd, block_tree(pd), 3, 4);
  CHECK(branch.block == 0);
  CHECK(branch.u == 1);
  CHECK(branch.v == 0);

  for (const Poset& p : glued_instances(29, 50)) {
    const auto d = block_decomposition(p);
    const auto tree = block_tree(d);
    const auto g = cover_graph(p);
    for (ElementId x = 0; x < p.size(); ++x) {
      const auto from_x = distances(g, x);
      for (ElementId y = 0; y < p.size(); ++y) {
        if (x == y || d.zindex[x] == d.zindex[y]) continue;
        const auto cut = cut_set(p, x, y);
        const auto oracle = cut_oracle(g, x, y);
        CHECK(std::set<ElementId>(cut.begin(), cut.end()) == oracle);
        REQUIRE(!cut.empty());

        std::size_t i = d.size();
        for (ElementId c : cut) i = std::min(i, d.zindex[c]);
        const auto from_y = distances(g, y);
        ElementId u = 0, v = 0;
        std::size_t du = g.n, dv = g.n;
        for (ElementId c : cut) {
          if (d.zindex[c] != i) continue;
          if (from_x[c] < du) du = from_x[c], u = c;
          if (from_y[c] < dv) dv = from_y[c], v = c;
        }
        const auto triple = iuv(d, tree, x, y);
        CHECK(triple.block == i);
        CHECK(triple.u == u);
        CHECK(triple.v == v);
      }
    }
  }
}

TEST_CASE("sigma climbs") {
  // 2 < 0 with 0 in Z_1 = {0, 1}: one step up.
  const Poset p = from(3, {{1, 0}, {2, 0}});
  const auto bd = block_decomposition(p);
  CHECK(sigma1(p, bd, 0) == 0);
  CHECK(sigma1(p, bd, 1) == 1);
  CHECK(sigma1(p, bd, 2) == 0);

  for (const Poset& g : glued_instances(31, 60)) {
    const auto d = block_decomposition(g);
    for (ElementId a = 0; a < g.size(); ++a) {
      const ElementId up = sigma1(g, d, a), down = sigma2(g, d, a);
      if (d.zindex[a] == 0) {
        CHECK(up == a);
        CHECK(down == a);
      }
      if (up != a) CHECK(g.less(a, up));
      if (down != a) CHECK(g.less(down, a));
    }
  }
}
