#include "bdim/poset.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

namespace bdim {

namespace {

std::vector<Bitset> transpose(const std::vector<Bitset>& rows) {
  const std::size_t n = rows.size();
  std::vector<Bitset> cols(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (auto y = rows[x].find_first(); y != Bitset::npos; y = rows[x].find_next(y)) {
      cols[y].set(x);
    }
  }
  return cols;
}

}  // namespace

Poset::Poset(std::size_t n) : up_(n, Bitset(n)), down_(n, Bitset(n)) {}

Poset::Poset(std::vector<Bitset> up) : up_(std::move(up)), down_(transpose(up_)) {}

Poset Poset::from_relations(std::size_t n, std::span<const ElementPair> relations) {
  if (n == 0) throw Error("poset must have at least one element");
  std::vector<Bitset> up(n, Bitset(n));
  for (const auto& [x, y] : relations) {
    if (x >= n || y >= n) {
      throw Error("relation (" + std::to_string(x) + ", " + std::to_string(y) +
                  ") out of range for n = " + std::to_string(n));
    }
    up[x].set(y);
  }
  // Warshall over bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (up[i][k]) up[i] |= up[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (up[i][i]) {
      throw CycleError("relations force " + std::to_string(i) + " < " + std::to_string(i));
    }
  }
  return Poset(std::move(up));
}

std::size_t Poset::relation_count() const {
  std::size_t total = 0;
  for (const auto& row : up_) total += row.count();
  return total;
}

Poset Poset::induced(std::span<const ElementId> elements) const {
  const std::size_t m = elements.size();
  std::vector<Bitset> up(m, Bitset(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (less(elements[a], elements[b])) up[a].set(b);
    }
  }
  return Poset(std::move(up));
}

LinearOrder::LinearOrder(std::vector<ElementId> elements) : elements_(std::move(elements)) {
  ElementId top = 0;
  for (ElementId x : elements_) top = std::max(top, x);
  positions_.assign(elements_.empty() ? 0 : top + 1, kAbsent);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    auto& slot = positions_[elements_[i]];
    if (slot != kAbsent) {
      throw Error("linear order repeats element " + std::to_string(elements_[i]));
    }
    slot = static_cast<std::uint32_t>(i);
  }
}

std::size_t LinearOrder::position(ElementId x) const {
  if (!contains(x)) throw SupportError("element " + std::to_string(x) + " not in order");
  return positions_[x];
}

ElementSet LinearOrder::support() const {
  ElementSet s = elements_;
  std::sort(s.begin(), s.end());
  return s;
}

LinearOrder LinearOrder::reversed() const {
  return LinearOrder(std::vector<ElementId>(elements_.rbegin(), elements_.rend()));
}

bool IncPairSet::is_symmetric() const {
  std::vector<ElementPair> sorted = pairs;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [x, y] : pairs) {
    if (!std::binary_search(sorted.begin(), sorted.end(), ElementPair{y, x})) return false;
  }
  return true;
}

Poset poset_from_relations(std::size_t n, std::span<const ElementPair> relations) {
  return Poset::from_relations(n, relations);
}

Poset dual(const Poset& poset) {
  std::vector<ElementPair> rel;
  for (ElementId x = 0; x < poset.size(); ++x) {
    const auto& row = poset.above(x);
    for (auto y = row.find_first(); y != Bitset::npos; y = row.find_next(y)) {
      rel.emplace_back(static_cast<ElementId>(y), x);
    }
  }
  return Poset::from_relations(poset.size(), rel);
}

std::vector<ElementPair> cover_pairs(const Poset& poset) {
  std::vector<ElementPair> covers;
  for (ElementId y = 0; y < poset.size(); ++y) {
    const auto& up = poset.above(y);
    for (auto x = up.find_first(); x != Bitset::npos; x = up.find_next(x)) {
      // x covers y iff nothing lies strictly between.
      if (!up.intersects(poset.below(static_cast<ElementId>(x)))) {
        covers.emplace_back(y, static_cast<ElementId>(x));
      }
    }
  }
  return covers;
}

IncPairSet incomparable_pairs(const Poset& poset) {
  IncPairSet inc;
  for (ElementId x = 0; x < poset.size(); ++x) {
    for (ElementId y = 0; y < poset.size(); ++y) {
      if (poset.incomparable(x, y)) inc.pairs.emplace_back(x, y);
    }
  }
  return inc;
}

Poset standard_example(std::size_t n) {
  if (n < 2) throw Error("standard example needs n >= 2");
  std::vector<ElementPair> rel;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) rel.emplace_back(static_cast<ElementId>(i), static_cast<ElementId>(n + j));
    }
  }
  return Poset::from_relations(2 * n, rel);
}

bool is_chain(const Poset& poset) {
  const std::size_t n = poset.size();
  return poset.relation_count() == n * (n - 1) / 2;
}

bool is_antichain(const Poset& poset) { return poset.relation_count() == 0; }

LinearOrder restrict(const LinearOrder& order, std::span<const ElementId> subset) {
  std::vector<char> keep;
  for (ElementId y : subset) {
    if (y >= keep.size()) keep.resize(y + 1, 0);
    keep[y] = 1;
  }
  std::vector<ElementId> out;
  for (ElementId x : order.elements()) {
    if (x < keep.size() && keep[x]) out.push_back(x);
  }
  return LinearOrder(std::move(out));
}

LinearOrder concat(std::span<const LinearOrder> parts) {
  std::vector<ElementId> out;
  for (const auto& part : parts) {
    out.insert(out.end(), part.elements().begin(), part.elements().end());
  }
  try {
    return LinearOrder(std::move(out));
  } catch (const Error& e) {
    throw OverlapError(std::string("concat: parts overlap: ") + e.what());
  }
}

LinearOrder merge_at_cut(const LinearOrder& outer, const LinearOrder& inner, ElementId w) {
  if (!outer.contains(w) || !inner.contains(w)) {
    throw BadIntersectionError("merge point " + std::to_string(w) + " missing from an order");
  }
  for (ElementId x : inner.elements()) {
    if (x != w && outer.contains(x)) {
      throw BadIntersectionError("orders share " + std::to_string(x) + " besides the merge point " +
                                 std::to_string(w));
    }
  }
  const auto& a = outer.elements();
  const auto& c = inner.elements();
  const auto split_outer = a.begin() + static_cast<std::ptrdiff_t>(outer.position(w));
  const auto split_inner = c.begin() + static_cast<std::ptrdiff_t>(inner.position(w));

  std::vector<ElementId> merged;
  merged.reserve(a.size() + c.size() - 1);
  merged.insert(merged.end(), a.begin(), split_outer);      // A
  merged.insert(merged.end(), c.begin(), split_inner);      // C
  merged.push_back(w);
  merged.insert(merged.end(), split_inner + 1, c.end());    // D
  merged.insert(merged.end(), split_outer + 1, a.end());    // B
  return LinearOrder(std::move(merged));
}

bool is_linear_extension(const Poset& poset, const LinearOrder& order) {
  const auto& elems = order.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] >= poset.size()) return false;
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (poset.less(elems[j], elems[i])) return false;
    }
  }
  return true;
}

LinearOrder lowest_first_extension(const Poset& poset) {
  const std::size_t n = poset.size();
  std::vector<std::size_t> pending(n);
  std::priority_queue<ElementId, std::vector<ElementId>, std::greater<>> ready;
  const auto covers = cover_pairs(poset);
  std::vector<std::vector<ElementId>> succ(n);
  for (const auto& [lo, hi] : covers) {
    succ[lo].push_back(hi);
    ++pending[hi];
  }
  for (ElementId x = 0; x < n; ++x) {
    if (pending[x] == 0) ready.push(x);
  }
  std::vector<ElementId> out;
  while (!ready.empty()) {
    ElementId x = ready.top();
    ready.pop();
    out.push_back(x);
    for (ElementId y : succ[x]) {
      if (--pending[y] == 0) ready.push(y);
    }
  }
  return LinearOrder(std::move(out));
}

}  // namespace bdim
