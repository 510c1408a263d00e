#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "bdim/boolean_realizer.hpp"
#include "bdim/coding.hpp"
#include "bdim/component_realizer.hpp"
#include "bdim/decomposition.hpp"
#include "bdim/poset.hpp"

namespace bdim {

/// A connected poset with its block labelling and one Boolean realizer per
/// block. realizers[i] works on local ids: local a is decomposition.blocks[i][a].
struct BlockRealizerInput {
  Poset poset;
  BlockDecomposition decomposition;
  std::vector<BooleanRealizer> realizers;
};

/// Block realizers mapped to global ids. They must already share one size.
std::vector<std::vector<LinearOrder>> global_block_orders(const BlockDecomposition& bd,
                                                          const std::vector<BooleanRealizer>& realizers);

/// d orders on X folded block by block with merge_at_cut at each root.
std::vector<LinearOrder> build_f3(const BlockDecomposition& bd, const std::vector<std::vector<LinearOrder>>& block_orders);

struct BelowFamilies {
  IncPairSet s;        // x below y, v not below y
  IncPairSet s_prime;  // y below x, x not below u
  LinearOrder m;
  LinearOrder m_prime;
};

BelowFamilies build_f6(const Poset& poset, const BlockDecomposition& bd, const BlockTree& tree);

struct LeftFamilies {
  std::array<IncPairSet, 4> r;        // x left of y
  std::array<IncPairSet, 4> r_prime;  // y left of x
  std::vector<LinearOrder> n;
  std::vector<LinearOrder> n_prime;
};

/// `l1` decides the u <= v split; it is the first order of F3.
LeftFamilies build_f7_f11(const Poset& poset, const BlockDecomposition& bd, const BlockTree& tree, const LinearOrder& l1);

/// L_0^i for every block: lowest-index-first extension of the block, global ids.
std::vector<LinearOrder> base_extensions(const Poset& poset, const BlockDecomposition& bd);

/// Q(S) where in_s[c] says whether catalog entry c is in S and block_code[i]
/// is the catalog entry of block i.
Poset qs_poset(const Poset& poset, const BlockDecomposition& bd, const std::vector<std::size_t>& block_code,
               const std::vector<LinearOrder>& base, const std::vector<bool>& in_s);

/// Three orders per member of the separating family, realizing each Q(S_j).
std::vector<LinearOrder> build_f10(const Poset& poset, const BlockDecomposition& bd,
                                   const std::vector<std::size_t>& block_code, const std::vector<LinearOrder>& base,
                                   const SeparatingFamily& sep);

/// Case analysis over F1..F11, optionally preceded by a component detector C.
class BlocksTruth final : public TruthFunction {
 public:
  BlocksTruth(FamilyLayout layout, std::size_t d, std::vector<std::vector<bool>> catalog);

  std::size_t arity() const override { return layout_.total(); }
  bool evaluate(const Bits& bits) const override;
  std::string procedure() const override { return has_detector_ ? "general" : "blocks"; }
  nlohmann::json metadata() const override;

  const FamilyLayout& layout() const { return layout_; }

 private:
  bool apply(std::size_t code, const Bits& bits) const;
  bool left_case(const Bits& bits, std::size_t gate) const;
  bool decide(const Bits& bits) const;
  bool well_formed(const Bits& bits) const;
  bool consistent_with_less(const Bits& bits) const;

  FamilyLayout layout_;
  std::size_t d_;
  std::size_t r_;
  std::vector<std::vector<bool>> catalog_;
  SeparatingFamily sep_;
  bool has_detector_;
  std::array<std::size_t, 12> offset_{};  // C, F1..F11
};

/// Connected posets only (DisconnectedError). A single block returns its own realizer.
BooleanRealizer build_block_realizer(const BlockRealizerInput& input);

/// A component of a poset with its own block labelling, in local ids.
struct ComponentBlocks {
  ElementSet elements;
  Poset poset;
  BlockDecomposition decomposition;
};

std::vector<ComponentBlocks> component_blocks(const Poset& poset);

/// AND-realizers of minimum realizers of every block. BudgetError when a
/// block exceeds `max_dimension`.
std::vector<BooleanRealizer> and_block_realizers(const Poset& poset, const BlockDecomposition& bd,
                                                 std::size_t max_dimension);

/// Any poset. block_realizers[c] holds the block realizers of
/// component_blocks(poset)[c].
BooleanRealizer build_general_realizer(const Poset& poset,
                                       const std::vector<std::vector<BooleanRealizer>>& block_realizers);

}  // namespace bdim
