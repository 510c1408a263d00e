#include <algorithm>
#include <vector>

#include "doctest.h"
#include "support/brute.hpp"

#include "bdim/generators.hpp"
#include "bdim/poset.hpp"

using namespace bdim;

namespace {

Poset chain(std::size_t n) {
  std::vector<ElementPair> rel;
  for (ElementId i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return Poset::from_relations(n, rel);
}

bool is_strict_order(const Poset& p) {
  for (ElementId a = 0; a < p.size(); ++a) {
    if (p.less(a, a)) return false;
    for (ElementId b = 0; b < p.size(); ++b) {
      if (p.less(a, b) && p.less(b, a)) return false;
      for (ElementId c = 0; c < p.size(); ++c) {
        if (p.less(a, b) && p.less(b, c) && !p.less(a, c)) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("closure infers transitive pairs") {
  const std::vector<ElementPair> rel = {{0, 1}, {1, 2}};
  const Poset p = Poset::from_relations(3, rel);
  CHECK(p.less(0, 2));
  CHECK(p.relation_count() == 3);
}

TEST_CASE("cyclic relations are rejected") {
  const std::vector<ElementPair> rel = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Poset::from_relations(2, rel), CycleError);
}

TEST_CASE("standard example sizes") {
  CHECK(standard_example(2).relation_count() == 2);
  CHECK(standard_example(3).relation_count() == 6);
  CHECK_THROWS_AS(standard_example(1), Error);
}

TEST_CASE("dual") {
  const Poset c = dual(chain(3));
  CHECK(c.less(2, 1));
  CHECK(c.less(1, 0));
  CHECK_FALSE(c.less(0, 1));
  CHECK(dual(Poset(4)) == Poset(4));

  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const Poset p = random_poset(1 + k % 12, 0.3, rng);
    CHECK(dual(dual(p)) == p);
    auto inc = incomparable_pairs(p).pairs;
    auto swapped = incomparable_pairs(dual(p)).pairs;
    for (auto& [x, y] : swapped) std::swap(x, y);
    std::sort(inc.begin(), inc.end());
    std::sort(swapped.begin(), swapped.end());
    CHECK(inc == swapped);
  }
}

TEST_CASE("cover pairs") {
  const std::vector<ElementPair> chain_covers = {{0, 1}, {1, 2}};
  CHECK(cover_pairs(chain(3)) == chain_covers);
  CHECK(cover_pairs(Poset(3)).empty());
  CHECK(cover_pairs(standard_example(3)).size() == 6);

  Rng rng(5);
  for (int k = 0; k < 50; ++k) {
    const Poset p = random_poset(1 + k % 15, 0.25, rng);
    const auto covers = cover_pairs(p);
    CHECK(Poset::from_relations(p.size(), covers) == p);
  }
}

TEST_CASE("incomparable pairs") {
  CHECK(incomparable_pairs(chain(4)).empty());
  const auto two = incomparable_pairs(Poset(2));
  CHECK(two.size() == 2);
  CHECK(two.is_symmetric());
  CHECK(incomparable_pairs(standard_example(2)).size() == 8);
}

TEST_CASE("random posets are strict orders") {
  Rng rng(11);
  for (int k = 0; k < 40; ++k) CHECK(is_strict_order(random_poset(1 + k, 0.2, rng)));
}

TEST_CASE("restrict and concat") {
  const LinearOrder l({0, 1, 2, 3});
  const ElementId odd[] = {1, 3};
  CHECK(restrict(l, odd).elements() == std::vector<ElementId>{1, 3});
  const auto all = l.support();
  CHECK(restrict(l, all) == l);

  const LinearOrder a({4, 0}), b({2, 1});
  const LinearOrder parts[] = {a, b};
  const LinearOrder joined = concat(parts);
  CHECK(joined.elements() == std::vector<ElementId>{4, 0, 2, 1});
  const auto a_support = a.support();
  CHECK(restrict(joined, a_support) == a);
  const LinearOrder single[] = {a};
  CHECK(concat(single) == a);
  const LinearOrder clash[] = {a, LinearOrder({0, 5})};
  CHECK_THROWS_AS(concat(clash), OverlapError);
}

TEST_CASE("merge at a cut point") {
  const ElementId w = 9;
  const LinearOrder outer({1, w, 2}), inner({3, w, 4});
  CHECK(merge_at_cut(outer, inner, w).elements() == std::vector<ElementId>{1, 3, w, 4, 2});
  CHECK(merge_at_cut(LinearOrder({w}), inner, w) == inner);
  CHECK_THROWS_AS(merge_at_cut(outer, LinearOrder({1, w}), w), BadIntersectionError);
  CHECK_THROWS_AS(merge_at_cut(outer, LinearOrder({3, 4}), w), BadIntersectionError);

  Rng rng(17);
  for (int k = 0; k < 100; ++k) {
    std::vector<ElementId> ids(12);
    for (ElementId i = 0; i < ids.size(); ++i) ids[i] = i;
    std::shuffle(ids.begin(), ids.end(), rng);
    const std::size_t split = 1 + rng() % 10;
    std::vector<ElementId> left(ids.begin(), ids.begin() + split), right(ids.begin() + split, ids.end());
    const ElementId cut = left[rng() % left.size()];
    right.insert(right.begin() + rng() % (right.size() + 1), cut);
    const LinearOrder l(left), lp(right);
    const LinearOrder m = merge_at_cut(l, lp, cut);
    CHECK(m.size() == 12);
    const auto ls = l.support(), rs = lp.support();
    CHECK(restrict(m, ls) == l);
    CHECK(restrict(m, rs) == lp);
  }
}

TEST_CASE("linear extensions") {
  const Poset c = chain(3);
  CHECK(is_linear_extension(c, LinearOrder({0, 1, 2})));
  CHECK_FALSE(is_linear_extension(c, LinearOrder({2, 1, 0})));

  Rng rng(23);
  const Poset p = random_poset(5, 0.4, rng);
  for (const auto& seq : brute::linear_extensions(p)) CHECK(is_linear_extension(p, LinearOrder(seq)));
  CHECK(is_linear_extension(p, lowest_first_extension(p)));
}

TEST_CASE("orders reject repeats and missing elements") {
  CHECK_THROWS_AS(LinearOrder({0, 1, 0}), Error);
  CHECK_THROWS_AS(LinearOrder({0, 2}).position(1), SupportError);
}
