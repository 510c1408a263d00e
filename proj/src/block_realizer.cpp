#include "bdim/block_realizer.hpp"

#include <algorithm>
#include <string>

#include "bdim/oracles.hpp"

namespace bdim {

namespace {

constexpr std::array<const char*, 12> kNames = {"C", "F1", "F2", "F3", "F4", "F5",
                                                "F6", "F7", "F8", "F9", "F10", "F11"};

// A realizer of size 3 for a forest poset. When two orders already suffice, the
// reversals of the second are split over two extensions so that no two of the
// three realize the poset. Otherwise missing orders are extensions not already
// present, and a copy only when there is nothing else.
std::vector<LinearOrder> three_orders(const Poset& poset) {
  std::vector<LinearOrder> orders;
  for (auto& o : forest_realizer3(poset).extensions) {
    if (std::find(orders.begin(), orders.end(), o) == orders.end()) orders.push_back(std::move(o));
  }
  if (orders.size() == 2) {
    IncPairSet halves[2];
    std::size_t k = 0;
    for (ElementId x = 0; x < poset.size(); ++x) {
      for (ElementId y = 0; y < poset.size(); ++y) {
        if (poset.incomparable(x, y) && orders[0].before(x, y)) halves[k++ % 2].pairs.emplace_back(x, y);
      }
    }
    if (!halves[1].empty()) {
      const std::vector<LinearOrder> spread = {orders[0], reverse_set(poset, halves[0]), reverse_set(poset, halves[1])};
      bool needed = true;
      for (std::size_t skip = 0; skip < 3 && needed; ++skip) {
        Realizer rest;
        for (std::size_t i = 0; i < 3; ++i) {
          if (i != skip) rest.extensions.push_back(spread[i]);
        }
        needed = !is_realizer(poset, rest);
      }
      if (needed) return spread;
    }
  }
  const LinearOrder candidates[] = {lowest_first_extension(poset), lowest_first_extension(dual(poset)).reversed()};
  for (const auto& c : candidates) {
    if (orders.size() < 3 && std::find(orders.begin(), orders.end(), c) == orders.end()) orders.push_back(c);
  }
  orders.resize(std::max<std::size_t>(orders.size(), 3), orders.back());
  return orders;
}

LinearOrder map_order(const LinearOrder& local, const ElementSet& ids) {
  std::vector<ElementId> seq;
  seq.reserve(local.size());
  for (ElementId a : local.elements()) seq.push_back(ids[a]);
  return LinearOrder(std::move(seq));
}

LinearOrder zpart_order(const BlockDecomposition& bd, const std::vector<std::size_t>& visit) {
  std::vector<ElementId> seq;
  for (std::size_t i : visit) seq.insert(seq.end(), bd.zparts[i].begin(), bd.zparts[i].end());
  return LinearOrder(std::move(seq));
}

std::vector<LinearOrder> sigma_codes(const Poset& poset, const BlockDecomposition& bd,
                                     const std::vector<std::size_t>& block_code, std::size_t r, bool upward) {
  std::vector<std::size_t> codes(poset.size());
  for (ElementId a = 0; a < poset.size(); ++a) {
    const ElementId end = upward ? sigma1(poset, bd, a) : sigma2(poset, bd, a);
    codes[a] = block_code[bd.zindex[end]];
  }
  return lemma2_orders(codes, r);
}

// Pairs that survive to the left-case table must have x < u, v < y and
// u != v; anything else means the construction is broken.
void check_left_gate(const Poset& poset, const BlockDecomposition& bd, const BlockTree& tree, const Poset& q,
                     const std::vector<LinearOrder>& gate, PairCase side) {
  for (ElementId x = 0; x < poset.size(); ++x) {
    for (ElementId y = 0; y < poset.size(); ++y) {
      if (x == y || bd.zindex[x] == bd.zindex[y] || q.comparable(x, y)) continue;
      if (classify_pair(bd, tree, x, y) != side) continue;
      bool open = true;
      for (const auto& ext : gate) open = open && ext.before(x, y);
      if (!open) continue;
      const CutTriple c = iuv(bd, tree, x, y);
      if (!poset.less(x, c.u) || !poset.less(c.v, y) || c.u == c.v) {
        throw Error("self-test failed: pair (" + std::to_string(x) + ", " + std::to_string(y) +
                    ") reaches the left-case table without x < u, v < y, u != v");
      }
    }
  }
}

// F1..F11 for one connected poset, all families already padded.
std::array<std::vector<LinearOrder>, 11> connected_families(const Poset& poset, const BlockDecomposition& bd,
                                                            const std::vector<BooleanRealizer>& realizers,
                                                            const std::vector<std::size_t>& block_code,
                                                            std::size_t r, const SeparatingFamily& sep) {
  std::array<std::vector<LinearOrder>, 11> f;
  const std::size_t n = poset.size();
  const BlockTree tree = block_tree(bd);

  f[0] = lemma1_family(bd.zindex);
  std::vector<std::size_t> own(n);
  for (ElementId x = 0; x < n; ++x) own[x] = block_code[bd.zindex[x]];
  f[1] = lemma2_orders(own, r);
  f[2] = build_f3(bd, global_block_orders(bd, realizers));

  const Poset q = q_poset(root_digraph(poset, bd));
  f[3] = three_orders(q);

  const auto [ltr, rtl] = dfs_orders(tree);
  f[4] = {zpart_order(bd, ltr), zpart_order(bd, rtl)};

  BelowFamilies below = build_f6(poset, bd, tree);
  f[5] = {std::move(below.m), std::move(below.m_prime)};

  LeftFamilies left = build_f7_f11(poset, bd, tree, f[2].front());
  check_left_gate(poset, bd, tree, q, left.n, PairCase::XLeftOfY);
  check_left_gate(poset, bd, tree, q, left.n_prime, PairCase::YLeftOfX);
  f[6] = std::move(left.n);
  f[10] = std::move(left.n_prime);

  f[7] = sigma_codes(poset, bd, block_code, r, true);
  f[8] = sigma_codes(poset, bd, block_code, r, false);
  f[9] = build_f10(poset, bd, block_code, base_extensions(poset, bd), sep);
  return f;
}

FamilyLayout layout_for(bool detector, std::size_t d, std::size_t r) {
  const std::array<std::size_t, 12> lengths = {2, 2, 4 * r, d, 3, 2, 2, 4, 4 * r, 4 * r, 6 * r, 4};
  FamilyLayout layout;
  for (std::size_t k = detector ? 0 : 1; k < 12; ++k) layout.add(kNames[k], lengths[k]);
  return layout;
}

std::vector<BooleanRealizer> pad_all(const std::vector<BooleanRealizer>& realizers, std::size_t d) {
  std::vector<BooleanRealizer> out;
  for (const auto& r : realizers) out.push_back(pad_realizer(r, d));
  return out;
}

}  // namespace

std::vector<std::vector<LinearOrder>> global_block_orders(const BlockDecomposition& bd,
                                                          const std::vector<BooleanRealizer>& realizers) {
  std::vector<std::vector<LinearOrder>> out;
  for (std::size_t i = 0; i < bd.size(); ++i) {
    if (realizers[i].size() != realizers.front().size()) throw Error("block realizers must be padded to one size");
    std::vector<LinearOrder> orders;
    for (const auto& o : realizers[i].orders) orders.push_back(map_order(o, bd.blocks[i]));
    out.push_back(std::move(orders));
  }
  return out;
}

std::vector<LinearOrder> build_f3(const BlockDecomposition& bd, const std::vector<std::vector<LinearOrder>>& block_orders) {
  const std::size_t d = block_orders.front().size();
  std::vector<LinearOrder> out;
  for (std::size_t j = 0; j < d; ++j) {
    LinearOrder current = block_orders[0][j];
    for (std::size_t k = 1; k < bd.size(); ++k) current = merge_at_cut(current, block_orders[k][j], bd.root(k));
    out.push_back(std::move(current));
  }
  return out;
}

BelowFamilies build_f6(const Poset& poset, const BlockDecomposition& bd, const BlockTree& tree) {
  BelowFamilies out;
  for (ElementId x = 0; x < poset.size(); ++x) {
    for (ElementId y = 0; y < poset.size(); ++y) {
      if (!poset.incomparable(x, y) || bd.zindex[x] == bd.zindex[y]) continue;
      const PairCase side = classify_pair(bd, tree, x, y);
      if (side == PairCase::XBelowY) {
        if (!poset.less(iuv(bd, tree, x, y).v, y)) out.s.pairs.emplace_back(x, y);
      } else if (side == PairCase::YBelowX) {
        if (!poset.less(x, iuv(bd, tree, x, y).u)) out.s_prime.pairs.emplace_back(x, y);
      }
    }
  }
  out.m = reverse_set(poset, out.s);
  out.m_prime = reverse_set(poset, out.s_prime);
  return out;
}

LeftFamilies build_f7_f11(const Poset& poset, const BlockDecomposition& bd, const BlockTree& tree, const LinearOrder& l1) {
  LeftFamilies out;
  for (ElementId x = 0; x < poset.size(); ++x) {
    for (ElementId y = 0; y < poset.size(); ++y) {
      if (!poset.incomparable(x, y) || bd.zindex[x] == bd.zindex[y]) continue;
      const PairCase side = classify_pair(bd, tree, x, y);
      if (side != PairCase::XLeftOfY && side != PairCase::YLeftOfX) continue;
      auto& sets = side == PairCase::XLeftOfY ? out.r : out.r_prime;
      const CutTriple c = iuv(bd, tree, x, y);
      const bool le = l1.position(c.u) <= l1.position(c.v);
      const bool ge = l1.position(c.u) >= l1.position(c.v);
      const bool x_not_u = !poset.less(x, c.u);
      const bool v_not_y = !poset.less(c.v, y);
      if (le && x_not_u) sets[0].pairs.emplace_back(x, y);
      if (le && v_not_y) sets[1].pairs.emplace_back(x, y);
      if (ge && x_not_u) sets[2].pairs.emplace_back(x, y);
      if (ge && v_not_y) sets[3].pairs.emplace_back(x, y);
    }
  }
  for (std::size_t k = 0; k < 4; ++k) {
    out.n.push_back(reverse_set(poset, out.r[k]));
    out.n_prime.push_back(reverse_set(poset, out.r_prime[k]));
  }
  return out;
}

std::vector<LinearOrder> base_extensions(const Poset& poset, const BlockDecomposition& bd) {
  std::vector<LinearOrder> out;
  for (const auto& block : bd.blocks) out.push_back(map_order(lowest_first_extension(poset.induced(block)), block));
  return out;
}

Poset qs_poset(const Poset& poset, const BlockDecomposition& bd, const std::vector<std::size_t>& block_code,
               const std::vector<LinearOrder>& base, const std::vector<bool>& in_s) {
  std::vector<ElementPair> rel;
  for (std::size_t i = 0; i < bd.size(); ++i) {
    if (in_s[block_code[i]]) {
      const auto& seq = base[i].elements();
      for (std::size_t k = 0; k + 1 < seq.size(); ++k) rel.emplace_back(seq[k], seq[k + 1]);
    } else if (i > 0) {
      const ElementId w = bd.root(i);
      for (ElementId z : bd.zparts[i]) {
        if (poset.less(z, w)) rel.emplace_back(z, w);
        if (poset.less(w, z)) rel.emplace_back(w, z);
      }
    }
  }
  return Poset::from_relations(poset.size(), rel);
}

std::vector<LinearOrder> build_f10(const Poset& poset, const BlockDecomposition& bd,
                                   const std::vector<std::size_t>& block_code, const std::vector<LinearOrder>& base,
                                   const SeparatingFamily& sep) {
  std::vector<LinearOrder> out;
  for (std::size_t j = 0; j < sep.size(); ++j) {
    auto triple = three_orders(qs_poset(poset, bd, block_code, base, sep.subsets[j]));
    out.insert(out.end(), triple.begin(), triple.end());
  }
  return out;
}

BlocksTruth::BlocksTruth(FamilyLayout layout, std::size_t d, std::vector<std::vector<bool>> catalog)
    : layout_(std::move(layout)),
      d_(d),
      r_(code_length(catalog.size())),
      catalog_(std::move(catalog)),
      sep_(separating_family(catalog_.size())),
      has_detector_(layout_.slices.front().name == "C") {
  for (std::size_t k = has_detector_ ? 0 : 1; k < 12; ++k) offset_[k] = layout_.at(kNames[k]).offset;
}

bool BlocksTruth::apply(std::size_t code, const Bits& bits) const {
  return catalog_[code][bits_index(bits, offset_[3], d_)];
}

bool BlocksTruth::left_case(const Bits& bits, std::size_t gate) const {
  for (std::size_t k = 0; k < 4; ++k) {
    if (!bits[offset_[gate] + k]) return false;
  }
  const auto up = lemma2_decode(bits, offset_[8], r_, catalog_.size());
  const auto down = lemma2_decode(bits, offset_[9], r_, catalog_.size());
  if (!up || !down) return false;
  const std::size_t alpha = up->first, beta = down->second;
  if (alpha == beta) return apply(alpha, bits);

  auto incomparable_in = [&](std::size_t j) {
    const std::size_t base = offset_[10] + 3 * j;
    return !(bits[base] == bits[base + 1] && bits[base + 1] == bits[base + 2]);
  };
  const bool inc1 = incomparable_in(sep_.first_separating(alpha, beta));
  const bool inc2 = incomparable_in(sep_.first_separating(beta, alpha));
  if (inc1 == inc2) return false;
  return apply(inc2 ? alpha : beta, bits);
}

bool BlocksTruth::decide(const Bits& bits) const {
  if (has_detector_ && !lemma1_same(bits[offset_[0]], bits[offset_[0] + 1])) return false;

  const auto own = lemma2_decode(bits, offset_[2], r_, catalog_.size());
  if (lemma1_same(bits[offset_[1]], bits[offset_[1] + 1])) {
    if (!own || own->first != own->second) return false;
    return apply(own->first, bits);
  }

  const std::size_t q = offset_[4];
  if (bits[q] && bits[q + 1] && bits[q + 2]) return true;
  if (!bits[q] && !bits[q + 1] && !bits[q + 2]) return false;

  const bool first = bits[offset_[5]], second = bits[offset_[5] + 1];
  if (first && second) {
    if (!bits[offset_[6]] || !own) return false;
    return apply(own->first, bits);
  }
  if (!first && !second) {
    if (!bits[offset_[6] + 1] || !own) return false;
    return apply(own->second, bits);
  }
  return left_case(bits, first ? 7 : 11);
}

// Shapes every pair of the construction shows, closed under swapping x and y.
// The coded families always decode. Q lies inside P and inside every Q(S_j), so
// a pair F4 reads as comparable reads the same way in F6, F7, F11 and each F10
// triple. Inside one Z-part the two codes agree, the first orders of F1 and F5
// are both ascending, both F5 orders use the same M_i and each Q(S_j) holding
// the part's table is a chain on it.
bool BlocksTruth::well_formed(const Bits& bits) const {
  const auto own = lemma2_decode(bits, offset_[2], r_, catalog_.size());
  if (!own || !lemma2_decode(bits, offset_[8], r_, catalog_.size()) ||
      !lemma2_decode(bits, offset_[9], r_, catalog_.size())) {
    return false;
  }
  const std::size_t q = offset_[4];
  if (bits[q] == bits[q + 1] && bits[q + 1] == bits[q + 2]) {
    for (std::size_t k = 0; k < 3 * sep_.size(); ++k) {
      if (bits[offset_[10] + k] != bits[q]) return false;
    }
    for (std::size_t k = 0; k < 4; ++k) {
      if (bits[offset_[7] + k] != bits[q] || bits[offset_[11] + k] != bits[q]) return false;
    }
    if (bits[offset_[6]] != bits[q] || bits[offset_[6] + 1] != bits[q]) return false;
  }
  if (has_detector_ && !lemma1_same(bits[offset_[0]], bits[offset_[0] + 1])) return true;
  if (!lemma1_same(bits[offset_[1]], bits[offset_[1] + 1])) return true;
  if (own->first != own->second || bits[offset_[5]] != bits[offset_[5] + 1]) return false;
  if (bits[offset_[1]] != bits[offset_[5]]) return false;
  for (std::size_t j = 0; j < sep_.size(); ++j) {
    if (!sep_.contains(j, own->first)) continue;
    const std::size_t base = offset_[10] + 3 * j;
    if (bits[base] != bits[base + 1] || bits[base + 1] != bits[base + 2]) return false;
  }
  return true;
}

// F6, F7 and F11 are linear extensions, so x<y reads 1 in all of them.
bool BlocksTruth::consistent_with_less(const Bits& bits) const {
  for (std::size_t k = 0; k < 2; ++k) {
    if (!bits[offset_[6] + k]) return false;
  }
  for (std::size_t k = 0; k < 4; ++k) {
    if (!bits[offset_[7] + k] || !bits[offset_[11] + k]) return false;
  }
  return true;
}

// A malformed string answers 1: its mirror is malformed too, so whichever pair
// produced it fails verification instead of slipping through as 0.
bool BlocksTruth::evaluate(const Bits& bits) const {
  if (!well_formed(bits)) return true;
  return decide(bits) && consistent_with_less(bits);
}

nlohmann::json BlocksTruth::metadata() const {
  nlohmann::json layout = nlohmann::json::object();
  for (const auto& s : layout_.slices) layout[s.name] = {{"offset", s.offset}, {"length", s.length}};
  nlohmann::json catalog = nlohmann::json::array();
  for (const auto& t : catalog_) catalog.push_back(table_string(t));
  nlohmann::json subsets = nlohmann::json::array();
  for (const auto& s : sep_.subsets) {
    nlohmann::json members = nlohmann::json::array();
    for (std::size_t a = 0; a < s.size(); ++a) {
      if (s[a]) members.push_back(a);
    }
    subsets.push_back(members);
  }
  return {{"d", d_}, {"r", r_}, {"layout", layout}, {"catalog", catalog}, {"separating", subsets}};
}

BooleanRealizer build_block_realizer(const BlockRealizerInput& input) {
  const Poset& poset = input.poset;
  const BlockDecomposition& bd = input.decomposition;
  if (components(poset).size() > 1) throw DisconnectedError("poset is disconnected");
  if (input.realizers.size() != bd.size()) throw Error("need one realizer per block");
  if (bd.size() == 1) return input.realizers.front();

  std::size_t d = 0;
  for (const auto& r : input.realizers) d = std::max(d, r.size());
  const auto padded = pad_all(input.realizers, d);
  const TruthCatalog catalog = truth_catalog(padded);
  const std::size_t r = code_length(catalog.tables.size());
  const SeparatingFamily sep = separating_family(catalog.tables.size());

  auto families = connected_families(poset, bd, padded, catalog.index_of, r, sep);
  BooleanRealizer out;
  for (auto& family : families) {
    for (auto& o : family) out.orders.push_back(std::move(o));
  }
  out.truth = std::make_shared<BlocksTruth>(layout_for(false, d, r), d, catalog.tables);
  if (out.truth->arity() != out.size()) throw Error("family sizes disagree with the layout");
  return out;
}

std::vector<ComponentBlocks> component_blocks(const Poset& poset) {
  std::vector<ComponentBlocks> out;
  for (auto& comp : components(poset)) {
    Poset sub = poset.induced(comp);
    BlockDecomposition bd = block_decomposition(sub);
    out.push_back({std::move(comp), std::move(sub), std::move(bd)});
  }
  return out;
}

std::vector<BooleanRealizer> and_block_realizers(const Poset& poset, const BlockDecomposition& bd,
                                                 std::size_t max_dimension) {
  std::vector<BooleanRealizer> out;
  for (const auto& block : bd.blocks) {
    auto r = minimum_realizer(poset.induced(block), max_dimension);
    if (!r) throw BudgetError("a block has dimension above " + std::to_string(max_dimension));
    out.push_back(and_realizer(*r));
  }
  return out;
}

BooleanRealizer build_general_realizer(const Poset& poset,
                                       const std::vector<std::vector<BooleanRealizer>>& block_realizers) {
  const auto parts = component_blocks(poset);
  if (block_realizers.size() != parts.size()) throw Error("need block realizers for every component");

  std::vector<BooleanRealizer> flat;
  for (std::size_t c = 0; c < parts.size(); ++c) {
    if (block_realizers[c].size() != parts[c].decomposition.size()) throw Error("need one realizer per block");
    flat.insert(flat.end(), block_realizers[c].begin(), block_realizers[c].end());
  }
  std::size_t d = 0;
  for (const auto& r : flat) d = std::max(d, r.size());
  flat = pad_all(flat, d);
  const TruthCatalog catalog = truth_catalog(flat);
  const std::size_t r = code_length(catalog.tables.size());
  const SeparatingFamily sep = separating_family(catalog.tables.size());

  // Per component: the connected families in local ids.
  std::vector<std::array<std::vector<LinearOrder>, 11>> local;
  std::size_t next = 0;
  for (std::size_t c = 0; c < parts.size(); ++c) {
    const std::size_t t = parts[c].decomposition.size();
    const std::vector<BooleanRealizer> mine(flat.begin() + next, flat.begin() + next + t);
    const std::vector<std::size_t> codes(catalog.index_of.begin() + next, catalog.index_of.begin() + next + t);
    next += t;
    local.push_back(connected_families(parts[c].poset, parts[c].decomposition, mine, codes, r, sep));
  }

  std::vector<std::size_t> comp_of(poset.size());
  for (std::size_t c = 0; c < parts.size(); ++c) {
    for (ElementId x : parts[c].elements) comp_of[x] = c;
  }
  BooleanRealizer out;
  out.orders = lemma1_family(comp_of);
  for (std::size_t k = 0; k < 11; ++k) {
    for (std::size_t slot = 0; slot < local.front()[k].size(); ++slot) {
      std::vector<ElementId> seq;
      seq.reserve(poset.size());
      for (std::size_t c = 0; c < parts.size(); ++c) {
        for (ElementId a : local[c][k][slot].elements()) seq.push_back(parts[c].elements[a]);
      }
      out.orders.emplace_back(std::move(seq));
    }
  }
  out.truth = std::make_shared<BlocksTruth>(layout_for(true, d, r), d, catalog.tables);
  if (out.truth->arity() != out.size()) throw Error("family sizes disagree with the layout");
  return out;
}

}  // namespace bdim
