#include "bdim/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <string>

namespace bdim {

namespace {

constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

// Vertices reachable from `sources` in the graph with `removed` deleted.
std::vector<char> reachable(const CoverGraph& g, std::span<const ElementId> sources,
                            std::optional<ElementId> removed) {
  std::vector<char> seen(g.n, 0);
  std::deque<ElementId> queue;
  for (ElementId s : sources) {
    if (removed && s == *removed) continue;
    if (!seen[s]) {
      seen[s] = 1;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    ElementId a = queue.front();
    queue.pop_front();
    for (ElementId b : g.adjacency[a]) {
      if ((removed && b == *removed) || seen[b]) continue;
      seen[b] = 1;
      queue.push_back(b);
    }
  }
  return seen;
}

}  // namespace

std::vector<ElementPair> CoverGraph::edges() const {
  std::vector<ElementPair> out;
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b : adjacency[a]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

CoverGraph cover_graph(const Poset& poset) {
  CoverGraph g;
  g.n = poset.size();
  g.adjacency.resize(g.n);
  for (const auto& [lo, hi] : cover_pairs(poset)) {
    g.adjacency[lo].push_back(hi);
    g.adjacency[hi].push_back(lo);
  }
  for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
  return g;
}

std::vector<ElementSet> components(const Poset& poset) {
  const CoverGraph g = cover_graph(poset);
  std::vector<char> assigned(g.n, 0);
  std::vector<ElementSet> out;
  for (ElementId s = 0; s < g.n; ++s) {
    if (assigned[s]) continue;
    const ElementId src[] = {s};
    const auto seen = reachable(g, src, std::nullopt);
    ElementSet comp;
    for (ElementId x = 0; x < g.n; ++x) {
      if (seen[x]) {
        comp.push_back(x);
        assigned[x] = 1;
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<ElementSet> graph_blocks(const CoverGraph& g) {
  // Hopcroft-Tarjan lowpoint search with an edge stack.
  std::vector<std::size_t> disc(g.n, kUnvisited), low(g.n, 0);
  std::vector<ElementPair> stack;
  std::vector<ElementSet> blocks;
  std::size_t timer = 0;

  std::function<void(ElementId, ElementId)> visit = [&](ElementId a, ElementId from) {
    disc[a] = low[a] = timer++;
    for (ElementId b : g.adjacency[a]) {
      if (disc[b] == kUnvisited) {
        stack.emplace_back(a, b);
        visit(b, a);
        low[a] = std::min(low[a], low[b]);
        if (low[b] >= disc[a]) {
          ElementSet block;
          while (true) {
            auto [p, q] = stack.back();
            stack.pop_back();
            block.push_back(p);
            block.push_back(q);
            if (p == a && q == b) break;
          }
          std::sort(block.begin(), block.end());
          block.erase(std::unique(block.begin(), block.end()), block.end());
          blocks.push_back(std::move(block));
        }
      } else if (b != from && disc[b] < disc[a]) {
        stack.emplace_back(a, b);
        low[a] = std::min(low[a], disc[b]);
      }
    }
  };

  for (ElementId s = 0; s < g.n; ++s) {
    if (disc[s] != kUnvisited) continue;
    if (g.adjacency[s].empty()) {
      disc[s] = timer++;
      blocks.push_back({s});
      continue;
    }
    visit(s, s);
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

ElementSet BlockDecomposition::prefix(std::size_t i) const {
  ElementSet out;
  for (std::size_t k = 0; k <= i; ++k) out.insert(out.end(), blocks[k].begin(), blocks[k].end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BlockDecomposition block_decomposition(const Poset& poset, std::size_t first_block) {
  const CoverGraph g = cover_graph(poset);
  const ElementId src[] = {0};
  const auto seen = reachable(g, src, std::nullopt);
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw DisconnectedError("block decomposition needs a connected poset");
  }

  const auto canonical = graph_blocks(g);
  if (first_block >= canonical.size()) throw Error("first_block out of range");

  std::vector<std::vector<std::size_t>> containing(g.n);
  for (std::size_t b = 0; b < canonical.size(); ++b) {
    for (ElementId x : canonical[b]) containing[x].push_back(b);
  }

  BlockDecomposition bd;
  std::vector<std::size_t> label(canonical.size(), kUnvisited);
  auto add = [&](std::size_t b, std::optional<ElementId> root) {
    label[b] = bd.blocks.size();
    bd.blocks.push_back(canonical[b]);
    bd.roots.push_back(root);
  };
  add(first_block, std::nullopt);
  for (std::size_t next = 0; next < bd.blocks.size(); ++next) {
    for (ElementId w : bd.blocks[next]) {
      for (std::size_t b : containing[w]) {
        if (label[b] == kUnvisited) add(b, w);
      }
    }
  }

  bd.cut_vertices = Bitset(g.n);
  for (ElementId x = 0; x < g.n; ++x) {
    if (containing[x].size() > 1) bd.cut_vertices.set(x);
  }

  bd.zindex.assign(g.n, BlockDecomposition::npos);
  bd.parent.assign(bd.blocks.size(), BlockDecomposition::npos);
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
    ElementSet z;
    for (ElementId x : bd.blocks[i]) {
      if (bd.roots[i] && *bd.roots[i] == x) continue;
      z.push_back(x);
      bd.zindex[x] = i;
    }
    bd.zparts.push_back(std::move(z));
  }
  for (std::size_t i = 1; i < bd.blocks.size(); ++i) bd.parent[i] = bd.zindex[bd.root(i)];
  return bd;
}

RootDigraph root_digraph(const Poset& poset, const BlockDecomposition& bd) {
  RootDigraph rd;
  rd.n = poset.size();
  for (std::size_t i = 1; i < bd.size(); ++i) {
    const ElementId r = bd.root(i);
    for (ElementId u : bd.zparts[i]) {
      if (poset.less(u, r)) rd.edges.emplace_back(u, r);
      else if (poset.less(r, u)) rd.edges.emplace_back(r, u);
    }
  }
  return rd;
}

Poset q_poset(const RootDigraph& digraph) { return Poset::from_relations(digraph.n, digraph.edges); }

bool BlockTree::is_ancestor(std::size_t a, std::size_t d) const {
  while (depth[d] > depth[a]) d = parent[d];
  return a == d;
}

std::size_t BlockTree::child_toward(std::size_t ancestor, std::size_t descendant) const {
  while (parent[descendant] != ancestor) descendant = parent[descendant];
  return descendant;
}

std::size_t BlockTree::lca(std::size_t a, std::size_t b) const {
  while (depth[a] > depth[b]) a = parent[a];
  while (depth[b] > depth[a]) b = parent[b];
  while (a != b) {
    a = parent[a];
    b = parent[b];
  }
  return a;
}

BlockTree block_tree(const BlockDecomposition& bd) {
  BlockTree tree;
  const std::size_t t = bd.size();
  tree.parent = bd.parent;
  tree.children.resize(t);
  tree.depth.assign(t, 0);
  // Parents always carry smaller labels, so one increasing pass suffices.
  for (std::size_t i = 1; i < t; ++i) {
    tree.children[tree.parent[i]].push_back(i);
    tree.depth[i] = tree.depth[tree.parent[i]] + 1;
  }
  return tree;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> dfs_orders(const BlockTree& tree) {
  auto preorder = [&](bool left_to_right) {
    std::vector<std::size_t> out;
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
      std::size_t z = stack.back();
      stack.pop_back();
      out.push_back(z);
      const auto& kids = tree.children[z];
      if (left_to_right) {
        stack.insert(stack.end(), kids.rbegin(), kids.rend());
      } else {
        stack.insert(stack.end(), kids.begin(), kids.end());
      }
    }
    return out;
  };
  return {preorder(true), preorder(false)};
}

PairCase classify_pair(const BlockDecomposition& bd, const BlockTree& tree, ElementId x, ElementId y) {
  const std::size_t ix = bd.zindex[x], iy = bd.zindex[y];
  if (ix == iy) throw SameZError("elements share a Z-part");
  if (tree.is_ancestor(ix, iy)) return PairCase::XBelowY;
  if (tree.is_ancestor(iy, ix)) return PairCase::YBelowX;
  const std::size_t a = tree.lca(ix, iy);
  return tree.child_toward(a, ix) < tree.child_toward(a, iy) ? PairCase::XLeftOfY
                                                               : PairCase::YLeftOfX;
}

ElementSet tail(const Poset& poset, const BlockDecomposition& bd, ElementId u, std::size_t /*i*/) {
  const CoverGraph g = cover_graph(poset);
  ElementSet targets;
  for (ElementId x : bd.blocks[0]) {
    if (x != u) targets.push_back(x);
  }
  const auto seen = reachable(g, targets, u);
  ElementSet out;
  for (ElementId v = 0; v < g.n; ++v) {
    if (v == u || !seen[v]) out.push_back(v);
  }
  return out;
}

ElementSet cut_set(const Poset& poset, ElementId x, ElementId y) {
  const CoverGraph g = cover_graph(poset);
  const ElementId src[] = {x};
  const auto connected = reachable(g, src, std::nullopt);
  ElementSet out;
  for (ElementId c = 0; c < g.n; ++c) {
    // Articulation test: deleting c separates two of its neighbours.
    bool articulation = false;
    if (g.adjacency[c].size() > 1) {
      const ElementId nb[] = {g.adjacency[c].front()};
      const auto seen = reachable(g, nb, c);
      for (ElementId other : g.adjacency[c]) {
        if (!seen[other]) articulation = true;
      }
    }
    if (!articulation) continue;
    if (c == x || c == y) {
      if (connected[y]) out.push_back(c);
      continue;
    }
    if (!connected[y]) continue;
    const auto seen = reachable(g, src, c);
    if (!seen[y]) out.push_back(c);
  }
  return out;
}

CutTriple iuv(const BlockDecomposition& bd, const BlockTree& tree, ElementId x, ElementId y) {
  const std::size_t ix = bd.zindex[x], iy = bd.zindex[y];
  if (ix == iy) throw SameZError("elements share a Z-part");
  if (tree.is_ancestor(ix, iy)) {
    const ElementId v = bd.root(tree.child_toward(ix, iy));
    return {ix, bd.cut_vertices[x] ? x : v, v};
  }
  if (tree.is_ancestor(iy, ix)) {
    const ElementId u = bd.root(tree.child_toward(iy, ix));
    return {iy, u, bd.cut_vertices[y] ? y : u};
  }
  const std::size_t a = tree.lca(ix, iy);
  return {a, bd.root(tree.child_toward(a, ix)), bd.root(tree.child_toward(a, iy))};
}

namespace {

ElementId climb(const BlockDecomposition& bd, ElementId a, const std::function<bool(ElementId, ElementId)>& step) {
  while (true) {
    const std::size_t i = bd.zindex[a];
    if (i == 0) return a;
    const ElementId r = bd.root(i);
    if (!step(a, r)) return a;
    a = r;
  }
}

}  // namespace

ElementId sigma1(const Poset& poset, const BlockDecomposition& bd, ElementId a) {
  return climb(bd, a, [&](ElementId w, ElementId r) { return poset.less(w, r); });
}

ElementId sigma2(const Poset& poset, const BlockDecomposition& bd, ElementId a) {
  return climb(bd, a, [&](ElementId w, ElementId r) { return poset.less(r, w); });
}

}  // namespace bdim
