#include "bdim/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

#include "bdim/decomposition.hpp"

namespace bdim {

namespace {

// Element digraph: cover edges of the poset plus y -> x for each (x, y) to reverse.
struct ReversalGraph {
  std::vector<std::vector<std::pair<ElementId, std::size_t>>> out;  // (target, pair index or npos)
  static constexpr std::size_t kCover = static_cast<std::size_t>(-1);

  ReversalGraph(const Poset& poset, const IncPairSet& pairs) : out(poset.size()) {
    for (const auto& [lo, hi] : cover_pairs(poset)) out[lo].emplace_back(hi, kCover);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto& [x, y] = pairs.pairs[k];
      out[y].emplace_back(x, k);
    }
  }
};

void require_incomparable(const Poset& poset, const IncPairSet& pairs) {
  for (const auto& [x, y] : pairs.pairs) {
    if (x >= poset.size() || y >= poset.size() || !poset.incomparable(x, y)) {
      throw NotIncomparableError("pair (" + std::to_string(x) + ", " + std::to_string(y) +
                                 ") is not an incomparable pair");
    }
  }
}

// Row-major n x n bit matrix of 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  bool test(std::size_t r, std::size_t c) const { return (row(r)[c / 64] >> (c % 64)) & 1U; }
  void set(std::size_t r, std::size_t c) { row(r)[c / 64] |= std::uint64_t{1} << (c % 64); }
  void or_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < words_; ++w) row(dst)[w] |= row(src)[w];
  }
  std::size_t size() const { return n_; }

 private:
  std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Backtracking partition of incomparable pairs into k reversible classes.
// Each class keeps the transitive closure of the poset plus its reversed
// pairs; a pair (x, y) fits a class unless x already lies below y there.
class ReversibleColoring {
 public:
  ReversibleColoring(const Poset& poset, std::vector<ElementPair> pairs, std::size_t colors)
      : pairs_(std::move(pairs)), colors_(colors), assignment_(pairs_.size(), kNone) {
    BitMatrix base(poset.size());
    for (ElementId x = 0; x < poset.size(); ++x) {
      const auto& row = poset.above(x);
      for (auto y = row.find_first(); y != Bitset::npos; y = row.find_next(y)) base.set(x, y);
    }
    closure_.assign(colors_, base);
  }

  std::optional<std::vector<std::size_t>> solve() {
    if (pairs_.empty()) return std::vector<std::size_t>{};
    if (colors_ == 0) return std::nullopt;
    if (!search(0, 0)) return std::nullopt;
    return assignment_;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool fits(std::size_t color, const ElementPair& p) const { return !closure_[color].test(p.first, p.second); }

  void add(std::size_t color, const ElementPair& p) {
    auto& m = closure_[color];
    const auto [x, y] = p;
    // New relation y < x: everything at or below y now sits below x and its up-set.
    std::vector<std::size_t> lower;
    for (std::size_t a = 0; a < m.size(); ++a) {
      if (a == y || m.test(a, y)) lower.push_back(a);
    }
    for (std::size_t a : lower) {
      m.set(a, x);
      m.or_row(a, x);
    }
  }

  bool search(std::size_t assigned, std::size_t used) {
    if (assigned == pairs_.size()) return true;

    // Most constrained pair first; a fresh colour is always available while used < k.
    std::size_t best = kNone, best_options = kNone;
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      if (assignment_[k] != kNone) continue;
      std::size_t options = used < colors_ ? 1 : 0;
      for (std::size_t c = 0; c < used; ++c) options += fits(c, pairs_[k]) ? 1 : 0;
      if (options < best_options) {
        best = k;
        best_options = options;
        if (options == 0) return false;
      }
    }

    const ElementPair p = pairs_[best];
    const std::size_t limit = std::min(used + 1, colors_);
    for (std::size_t c = 0; c < limit; ++c) {
      if (!fits(c, p)) continue;
      BitMatrix saved = closure_[c];
      add(c, p);
      assignment_[best] = c;
      if (search(assigned + 1, std::max(used, c + 1))) return true;
      assignment_[best] = kNone;
      closure_[c] = std::move(saved);
    }
    return false;
  }

  std::vector<ElementPair> pairs_;
  std::size_t colors_;
  std::vector<std::size_t> assignment_;
  std::vector<BitMatrix> closure_;
};

Realizer realizer_from_coloring(const Poset& poset, const std::vector<ElementPair>& pairs,
                                const std::vector<std::size_t>& colors, std::size_t size) {
  std::vector<IncPairSet> classes(size);
  for (std::size_t k = 0; k < pairs.size(); ++k) classes[colors[k]].pairs.push_back(pairs[k]);
  Realizer r;
  for (const auto& cls : classes) r.extensions.push_back(reverse_set(poset, cls));
  return r;
}

// Disjoint-sum realizer: component blocks ascending in every order except
// the second, which runs them descending so cross pairs are reversed.
Realizer combine_components(std::size_t n, const std::vector<ElementSet>& comps,
                            const std::vector<Realizer>& parts) {
  if (comps.size() == 1) {
    Realizer r = parts.front();
    for (auto& ext : r.extensions) {
      std::vector<ElementId> mapped;
      for (ElementId local : ext.elements()) mapped.push_back(comps.front()[local]);
      ext = LinearOrder(std::move(mapped));
    }
    return r;
  }
  std::size_t size = 2;
  for (const auto& p : parts) size = std::max(size, p.size());
  Realizer r;
  for (std::size_t i = 0; i < size; ++i) {
    std::vector<ElementId> seq;
    seq.reserve(n);
    auto append = [&](std::size_t c) {
      const auto& exts = parts[c].extensions;
      const auto& ext = exts[std::min(i, exts.size() - 1)];
      for (ElementId local : ext.elements()) seq.push_back(comps[c][local]);
    };
    if (i == 1) {
      for (std::size_t c = comps.size(); c-- > 0;) append(c);
    } else {
      for (std::size_t c = 0; c < comps.size(); ++c) append(c);
    }
    r.extensions.emplace_back(std::move(seq));
  }
  return r;
}

}  // namespace

bool is_realizer(const Poset& poset, const Realizer& realizer) {
  if (realizer.extensions.empty()) return false;
  for (const auto& ext : realizer.extensions) {
    if (ext.size() != poset.size() || !is_linear_extension(poset, ext)) return false;
  }
  for (ElementId x = 0; x < poset.size(); ++x) {
    for (ElementId y = 0; y < poset.size(); ++y) {
      if (!poset.incomparable(x, y)) continue;
      bool reversed = false;
      for (const auto& ext : realizer.extensions) reversed = reversed || ext.before(y, x);
      if (!reversed) return false;
    }
  }
  return true;
}

std::optional<std::vector<ElementPair>> find_alternating_cycle(const Poset& poset, const IncPairSet& pairs) {
  require_incomparable(poset, pairs);
  const ReversalGraph g(poset, pairs);
  const std::size_t n = poset.size();

  enum : char { kWhite, kGray, kBlack };
  std::vector<char> state(n, kWhite);
  // DFS frames: node, next edge to try, label of the edge used to enter it.
  struct Frame {
    ElementId node;
    std::size_t next;
    std::size_t via;
  };
  for (ElementId s = 0; s < n; ++s) {
    if (state[s] != kWhite) continue;
    std::vector<Frame> stack{{s, 0, ReversalGraph::kCover}};
    state[s] = kGray;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next == g.out[f.node].size()) {
        state[f.node] = kBlack;
        stack.pop_back();
        continue;
      }
      const auto [to, label] = g.out[f.node][f.next++];
      if (state[to] == kWhite) {
        state[to] = kGray;
        stack.push_back({to, 0, label});
      } else if (state[to] == kGray) {
        // Cycle: the stack from `to` upward, closed by this edge.
        std::vector<std::size_t> labels;
        std::size_t start = stack.size();
        while (stack[start - 1].node != to) --start;
        for (std::size_t k = start; k < stack.size(); ++k) labels.push_back(stack[k].via);
        labels.push_back(label);
        std::vector<ElementPair> cycle;
        for (std::size_t l : labels) {
          if (l != ReversalGraph::kCover) cycle.push_back(pairs.pairs[l]);
        }
        return cycle;
      }
    }
  }
  return std::nullopt;
}

LinearOrder reverse_set(const Poset& poset, const IncPairSet& pairs) {
  require_incomparable(poset, pairs);
  const ReversalGraph g(poset, pairs);
  const std::size_t n = poset.size();
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& edges : g.out) {
    for (const auto& e : edges) ++indegree[e.first];
  }
  std::priority_queue<ElementId, std::vector<ElementId>, std::greater<>> ready;
  for (ElementId x = 0; x < n; ++x) {
    if (indegree[x] == 0) ready.push(x);
  }
  std::vector<ElementId> out;
  while (!ready.empty()) {
    const ElementId x = ready.top();
    ready.pop();
    out.push_back(x);
    for (const auto& e : g.out[x]) {
      if (--indegree[e.first] == 0) ready.push(e.first);
    }
  }
  if (out.size() < n) {
    auto cycle = find_alternating_cycle(poset, pairs);
    throw NotReversibleError("set of incomparable pairs contains an alternating cycle",
                             cycle.value_or(std::vector<ElementPair>{}));
  }
  return LinearOrder(std::move(out));
}

IncPairSet critical_pairs(const Poset& poset) {
  IncPairSet out;
  for (ElementId x = 0; x < poset.size(); ++x) {
    for (ElementId y = 0; y < poset.size(); ++y) {
      if (!poset.incomparable(x, y)) continue;
      if (poset.below(x).is_subset_of(poset.below(y)) && poset.above(y).is_subset_of(poset.above(x))) {
        out.pairs.emplace_back(x, y);
      }
    }
  }
  return out;
}

std::optional<Realizer> minimum_realizer(const Poset& poset, std::size_t max_dimension) {
  const auto critical = critical_pairs(poset);
  if (critical.empty()) {
    if (max_dimension < 1) return std::nullopt;
    return Realizer{{lowest_first_extension(poset)}};
  }
  for (std::size_t d = 2; d <= max_dimension; ++d) {
    ReversibleColoring search(poset, critical.pairs, d);
    if (auto colors = search.solve()) return realizer_from_coloring(poset, critical.pairs, *colors, d);
  }
  return std::nullopt;
}

std::optional<std::size_t> exact_dimension(const Poset& poset, std::size_t max_dimension) {
  auto r = minimum_realizer(poset, max_dimension);
  if (!r) return std::nullopt;
  return r->size();
}

bool exact_bdim_at_most(const Poset& poset, std::size_t s) {
  const std::size_t n = poset.size();
  if (n > 6 || s > 3) throw BudgetError("exact Boolean dimension is limited to n <= 6, s <= 3");
  if (s == 0) return false;
  if (n == 1) return true;

  // Orders are taken up to reversal (flip that bit of the truth function) and
  // up to permutation of the family, so each order keeps 0 before 1 and the
  // tuple is nondecreasing.
  std::vector<std::uint64_t> masks;  // bit x*n+y set when x precedes y
  std::vector<ElementId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[perm[i]] = i;
    if (pos[0] > pos[1]) continue;
    std::uint64_t m = 0;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x != y && pos[x] < pos[y]) m |= std::uint64_t{1} << (x * n + y);
      }
    }
    masks.push_back(m);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::size_t> pair_index;
  std::vector<char> pair_less;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      pair_index.push_back(x * n + y);
      pair_less.push_back(poset.less(static_cast<ElementId>(x), static_cast<ElementId>(y)) ? 1 : 0);
    }
  }

  std::vector<std::size_t> pick(s, 0);
  const std::size_t m = masks.size();
  std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t level, std::size_t from) {
    if (level == s) {
      std::uint32_t strings_less = 0, strings_not = 0;
      for (std::size_t k = 0; k < pair_index.size(); ++k) {
        std::uint32_t code = 0;
        for (std::size_t i = 0; i < s; ++i) code |= static_cast<std::uint32_t>((masks[pick[i]] >> pair_index[k]) & 1U) << i;
        (pair_less[k] ? strings_less : strings_not) |= 1U << code;
        if (strings_less & strings_not) return false;
      }
      return true;
    }
    for (std::size_t j = from; j < m; ++j) {
      pick[level] = j;
      if (choose(level + 1, j)) return true;
    }
    return false;
  };
  return choose(0, 0);
}

bool cover_graph_is_forest(const Poset& poset) {
  return cover_pairs(poset).size() + components(poset).size() == poset.size();
}

Realizer forest_realizer3(const Poset& poset) {
  if (!cover_graph_is_forest(poset)) throw NotForestError("cover graph has a cycle");
  const auto comps = components(poset);
  std::vector<Realizer> parts;
  for (const auto& comp : comps) {
    const Poset sub = poset.induced(comp);
    auto r = minimum_realizer(sub, 3);
    if (!r) throw Error("no realizer of size 3 found for a tree poset");
    parts.push_back(std::move(*r));
  }
  Realizer r = combine_components(poset.size(), comps, parts);
  if (r.size() > 3 || !is_realizer(poset, r)) throw Error("forest realizer failed verification");
  return r;
}

}  // namespace bdim
