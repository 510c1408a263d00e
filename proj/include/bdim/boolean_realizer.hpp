#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "bdim/oracles.hpp"
#include "bdim/poset.hpp"

namespace bdim {

/// Bit i is set when x precedes y in order i.
using Bits = std::vector<bool>;

/// Truth functions see only the bit string. Each kind also knows how to
/// describe itself so a realizer can be written out and read back.
class TruthFunction {
 public:
  virtual ~TruthFunction() = default;

  virtual std::size_t arity() const = 0;
  virtual bool evaluate(const Bits& bits) const = 0;
  virtual std::string procedure() const = 0;
  virtual nlohmann::json metadata() const = 0;
};

using TruthPtr = std::shared_ptr<const TruthFunction>;

/// 1 exactly on the all-ones string.
class AndTruth final : public TruthFunction {
 public:
  explicit AndTruth(std::size_t arity) : arity_(arity) {}

  std::size_t arity() const override { return arity_; }
  bool evaluate(const Bits& bits) const override;
  std::string procedure() const override { return "and"; }
  nlohmann::json metadata() const override { return {{"arity", arity_}}; }

 private:
  std::size_t arity_;
};

/// Explicit table indexed by the bit string read with bit 0 least significant.
class TableTruth final : public TruthFunction {
 public:
  static constexpr std::size_t kMaxArity = 16;

  TableTruth(std::size_t arity, std::vector<bool> table);

  std::size_t arity() const override { return arity_; }
  bool evaluate(const Bits& bits) const override;
  std::string procedure() const override { return "table"; }
  nlohmann::json metadata() const override;

  const std::vector<bool>& table() const { return table_; }

 private:
  std::size_t arity_;
  std::vector<bool> table_;
};

std::size_t bits_index(const Bits& bits, std::size_t offset, std::size_t length);

/// All 2^arity values of `truth`. Throws BudgetError past TableTruth::kMaxArity.
std::vector<bool> tabulate(const TruthFunction& truth);

std::string table_string(const std::vector<bool>& table);

struct BooleanRealizer {
  std::vector<LinearOrder> orders;
  TruthPtr truth;

  std::size_t size() const { return orders.size(); }
};

/// Throws SupportError when x or y is missing from an order.
Bits query_bits(const std::vector<LinearOrder>& orders, ElementId x, ElementId y);

struct PairError {
  ElementId x;
  ElementId y;
  bool expected;
  bool got;
};

/// Two pairs sharing a bit string while only one of them is x < y.
struct Collision {
  Bits bits;
  ElementPair less_pair;
  ElementPair other_pair;
};

struct VerificationReport {
  std::vector<PairError> pair_errors;
  std::vector<Collision> collisions;

  bool pass() const { return pair_errors.empty() && collisions.empty(); }
};

VerificationReport verify(const Poset& poset, const BooleanRealizer& realizer);

BooleanRealizer and_realizer(const Realizer& realizer);

}  // namespace bdim
