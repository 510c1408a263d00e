#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bdim/boolean_realizer.hpp"
#include "bdim/poset.hpp"

namespace bdim {

/// Named slices of the flat order list.
struct FamilyLayout {
  struct Slice {
    std::string name;
    std::size_t offset = 0;
    std::size_t length = 0;
  };
  std::vector<Slice> slices;

  std::size_t add(std::string name, std::size_t length);
  const Slice& at(const std::string& name) const;
  std::size_t total() const;
};

/// A poset split into pieces (components here, blocks later), each with a
/// Boolean realizer over local ids: pieces[k][a] is local element a.
struct ComponentRealizerInput {
  Poset poset;
  std::vector<ElementSet> pieces;
  std::vector<BooleanRealizer> realizers;
};

/// Brings every realizer to the largest size by repeating its last order;
/// the padded truth table ignores the repeated coordinates.
ComponentRealizerInput pad_realizers(ComponentRealizerInput input);

BooleanRealizer pad_realizer(const BooleanRealizer& realizer, std::size_t size);

/// Deduplicated truth tables in order of first appearance, and the index of
/// each input realizer's table.
struct TruthCatalog {
  std::vector<std::vector<bool>> tables;
  std::vector<std::size_t> index_of;
};

TruthCatalog truth_catalog(const std::vector<BooleanRealizer>& realizers);

/// Reads "same component?" from two orders, the component's truth table from
/// a coding family, then applies that table to the d concatenated orders.
class ComponentsTruth final : public TruthFunction {
 public:
  ComponentsTruth(FamilyLayout layout, std::size_t d, std::vector<std::vector<bool>> catalog);

  std::size_t arity() const override { return layout_.total(); }
  bool evaluate(const Bits& bits) const override;
  std::string procedure() const override { return "components"; }
  nlohmann::json metadata() const override;

  const FamilyLayout& layout() const { return layout_; }

 private:
  FamilyLayout layout_;
  std::size_t d_;
  std::size_t r_;
  std::vector<std::vector<bool>> catalog_;
};

/// Requires at least two components (SingleComponentError). Pieces must be
/// the components of the poset in ascending order of least element.
BooleanRealizer build_component_realizer(const ComponentRealizerInput& input);

/// Inner realizers from exact minimum realizers, AND-combined.
ComponentRealizerInput and_inputs(const Poset& poset, std::vector<ElementSet> pieces, std::size_t max_dimension);

/// Whether ((2n)!)^s 2^(2^s) >= 2^(n^2).
bool counting_inequality_holds(std::uint64_t n, std::uint64_t s);

/// Least s >= 1 satisfying the counting inequality.
std::uint64_t min_orders_lower_bound(std::uint64_t n);

/// Height-2 poset with minimal a_i = i, maximal b_j = n + j, and each
/// a_i < b_j independently with probability 1/2.
Poset sample_pn(std::size_t n, std::uint64_t seed);

}  // namespace bdim
