#include "bdim/coding.hpp"

#include <algorithm>
#include <map>

namespace bdim {

std::size_t code_length(std::size_t t) {
  std::size_t r = 0;
  while ((std::size_t{1} << r) < t) ++r;
  return r;
}

std::vector<LinearOrder> lemma1_family(std::span<const std::size_t> coloring) {
  std::map<std::size_t, std::vector<ElementId>> classes;
  for (std::size_t x = 0; x < coloring.size(); ++x) classes[coloring[x]].push_back(static_cast<ElementId>(x));
  std::vector<ElementId> forward, backward;
  for (const auto& [colour, members] : classes) {
    forward.insert(forward.end(), members.begin(), members.end());
    backward.insert(backward.end(), members.rbegin(), members.rend());
  }
  return {LinearOrder(std::move(forward)), LinearOrder(std::move(backward))};
}

std::vector<LinearOrder> lemma2_orders(std::span<const std::size_t> codes, std::size_t r) {
  std::vector<LinearOrder> out;
  out.reserve(4 * r);
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<ElementId> in, rest;
    for (std::size_t x = 0; x < codes.size(); ++x) {
      ((codes[x] >> j) & 1U ? in : rest).push_back(static_cast<ElementId>(x));
    }
    const std::vector<ElementId> in_rev(in.rbegin(), in.rend());
    auto join = [](const std::vector<ElementId>& a, const std::vector<ElementId>& b) {
      std::vector<ElementId> seq(a);
      seq.insert(seq.end(), b.begin(), b.end());
      return LinearOrder(std::move(seq));
    };
    out.push_back(join(in, rest));
    out.push_back(join(in_rev, rest));
    out.push_back(join(rest, in));
    out.push_back(join(rest, in_rev));
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> lemma2_decode(const Bits& bits, std::size_t offset,
                                                                 std::size_t r, std::size_t t) {
  std::size_t cx = 0, cy = 0;
  for (std::size_t j = 0; j < r; ++j) {
    const std::size_t base = offset + 4 * j;
    const unsigned pattern = bits[base] << 3 | bits[base + 1] << 2 | bits[base + 2] << 1 | bits[base + 3];
    switch (pattern) {
      case 0b1010:
      case 0b0101:
        cx |= std::size_t{1} << j;
        cy |= std::size_t{1} << j;
        break;
      case 0b1100:
        cx |= std::size_t{1} << j;
        break;
      case 0b0011:
        cy |= std::size_t{1} << j;
        break;
      case 0b1111:
      case 0b0000:
        break;
      default:
        return std::nullopt;
    }
  }
  if (cx >= t || cy >= t) return std::nullopt;
  return std::pair{cx, cy};
}

std::optional<std::pair<std::size_t, std::size_t>> Lemma2Family::decode(const Bits& bits, std::size_t offset) const {
  auto codes = lemma2_decode(bits, offset, r, labels.size());
  if (!codes) return std::nullopt;
  return std::pair{labels[codes->first], labels[codes->second]};
}

Lemma2Family lemma2_family(std::span<const std::size_t> coloring) {
  Lemma2Family family;
  std::map<std::size_t, std::size_t> code_of;
  std::vector<std::size_t> codes(coloring.size());
  for (std::size_t x = 0; x < coloring.size(); ++x) {
    auto [it, fresh] = code_of.emplace(coloring[x], family.labels.size());
    if (fresh) family.labels.push_back(coloring[x]);
    codes[x] = it->second;
  }
  family.r = code_length(family.labels.size());
  family.orders = lemma2_orders(codes, family.r);
  return family;
}

std::size_t SeparatingFamily::first_separating(std::size_t a, std::size_t b) const {
  for (std::size_t j = 0; j < subsets.size(); ++j) {
    if (subsets[j][a] && !subsets[j][b]) return j;
  }
  throw Error("separating family does not split the pair");
}

SeparatingFamily separating_family(std::size_t size) {
  if (size == 0) throw Error("separating family needs a nonempty ground set");
  SeparatingFamily family;
  family.ground = size;
  const std::size_t r = code_length(size);
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<bool> s(size);
    for (std::size_t a = 0; a < size; ++a) s[a] = (a >> j) & 1U;
    family.subsets.push_back(std::move(s));
  }
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<bool> s = family.subsets[j];
    s.flip();
    family.subsets.push_back(std::move(s));
  }
  return family;
}

}  // namespace bdim
