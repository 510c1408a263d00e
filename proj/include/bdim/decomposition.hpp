#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bdim/poset.hpp"

namespace bdim {

struct CoverGraph {
  std::size_t n = 0;
  std::vector<std::vector<ElementId>> adjacency;  // sorted neighbour lists

  std::vector<ElementPair> edges() const;  // each undirected edge once, lo < hi
};

CoverGraph cover_graph(const Poset& poset);

/// Connected components of the cover graph, each sorted, ordered by least element.
std::vector<ElementSet> components(const Poset& poset);

/// Blocks of a graph (maximal 2-connected subgraphs, bridges, isolated
/// vertices) in canonical order: each block sorted, blocks sorted lexicographically.
std::vector<ElementSet> graph_blocks(const CoverGraph& graph);

/// Block labelling B_1..B_t of a connected poset in which every B_i (i >= 2)
/// meets the union of earlier blocks in exactly one point, its root.
/// Indices are 0-based throughout: blocks[0] is B_1.
struct BlockDecomposition {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::vector<ElementSet> blocks;               // X_i
  std::vector<std::optional<ElementId>> roots;  // rho(B_i); empty for i = 0
  std::vector<ElementSet> zparts;               // Z_i = X_i minus its root
  std::vector<std::size_t> zindex;              // element -> i with element in Z_i
  std::vector<std::size_t> parent;              // Z-part holding rho(B_i); npos for i = 0
  Bitset cut_vertices;

  std::size_t size() const { return blocks.size(); }
  ElementId root(std::size_t i) const { return *roots[i]; }
  /// Y_i = X_0 u ... u X_i.
  ElementSet prefix(std::size_t i) const;
};

/// Throws DisconnectedError for disconnected posets. `first_block` selects
/// B_1 among the canonical blocks of graph_blocks(); the default picks the
/// first block containing element 0. Later blocks are labelled breadth-first
/// over the block-cut tree.
BlockDecomposition block_decomposition(const Poset& poset, std::size_t first_block = 0);

/// Comparabilities between each root and the non-root points of its block,
/// directed from the smaller to the larger element.
struct RootDigraph {
  std::size_t n = 0;
  std::vector<ElementPair> edges;
};

RootDigraph root_digraph(const Poset& poset, const BlockDecomposition& bd);
Poset q_poset(const RootDigraph& digraph);

/// Tree on the Z-parts rooted at Z_1; children kept in ascending index order.
struct BlockTree {
  std::vector<std::size_t> parent;
  std::vector<std::vector<std::size_t>> children;
  std::vector<std::size_t> depth;

  bool is_ancestor(std::size_t a, std::size_t d) const;  // reflexive
  /// Child of `ancestor` on the path to `descendant` (ancestor strict).
  std::size_t child_toward(std::size_t ancestor, std::size_t descendant) const;
  std::size_t lca(std::size_t a, std::size_t b) const;
};

BlockTree block_tree(const BlockDecomposition& bd);

/// Depth-first preorders of the Z-parts: children left-to-right, then right-to-left.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> dfs_orders(const BlockTree& tree);

enum class PairCase { XBelowY, YBelowX, XLeftOfY, YLeftOfX };

/// Throws SameZError when x and y share a Z-part.
PairCase classify_pair(const BlockDecomposition& bd, const BlockTree& tree, ElementId x, ElementId y);

/// T(u, X_i): points all of whose cover-graph paths to X_1 pass through u.
ElementSet tail(const Poset& poset, const BlockDecomposition& bd, ElementId u, std::size_t i);

/// Cut vertices of the cover graph lying on every x-y path, endpoints included.
ElementSet cut_set(const Poset& poset, ElementId x, ElementId y);

struct CutTriple {
  std::size_t block;  // least index whose block meets Cut(x, y)
  ElementId u;        // member of Cut(x, y) in that Z-part nearest x
  ElementId v;        // ... nearest y
};

/// The (i, u, v) triple of a cross-Z pair, read off the block tree.
CutTriple iuv(const BlockDecomposition& bd, const BlockTree& tree, ElementId x, ElementId y);

/// End of the longest climb a -> rho(B_i) -> ... through roots above
/// (sigma1) or below (sigma2) the current point.
ElementId sigma1(const Poset& poset, const BlockDecomposition& bd, ElementId a);
ElementId sigma2(const Poset& poset, const BlockDecomposition& bd, ElementId a);

}  // namespace bdim
