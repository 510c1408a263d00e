#include "bdim/boolean_realizer.hpp"

#include <string>
#include <unordered_map>

namespace bdim {

bool AndTruth::evaluate(const Bits& bits) const {
  for (bool b : bits) {
    if (!b) return false;
  }
  return true;
}

TableTruth::TableTruth(std::size_t arity, std::vector<bool> table) : arity_(arity), table_(std::move(table)) {
  if (arity_ > kMaxArity) throw BudgetError("truth table arity " + std::to_string(arity_) + " too large");
  if (table_.size() != (std::size_t{1} << arity_)) throw Error("truth table has the wrong length");
}

bool TableTruth::evaluate(const Bits& bits) const { return table_[bits_index(bits, 0, bits.size())]; }

nlohmann::json TableTruth::metadata() const { return {{"arity", arity_}, {"table", table_string(table_)}}; }

std::size_t bits_index(const Bits& bits, std::size_t offset, std::size_t length) {
  std::size_t index = 0;
  for (std::size_t i = 0; i < length; ++i) {
    if (bits[offset + i]) index |= std::size_t{1} << i;
  }
  return index;
}

std::vector<bool> tabulate(const TruthFunction& truth) {
  const std::size_t s = truth.arity();
  if (s > TableTruth::kMaxArity) throw BudgetError("cannot tabulate a truth function of arity " + std::to_string(s));
  std::vector<bool> table(std::size_t{1} << s);
  Bits bits(s);
  for (std::size_t code = 0; code < table.size(); ++code) {
    for (std::size_t i = 0; i < s; ++i) bits[i] = (code >> i) & 1U;
    table[code] = truth.evaluate(bits);
  }
  return table;
}

std::string table_string(const std::vector<bool>& table) {
  std::string out;
  out.reserve(table.size());
  for (bool b : table) out.push_back(b ? '1' : '0');
  return out;
}

Bits query_bits(const std::vector<LinearOrder>& orders, ElementId x, ElementId y) {
  Bits bits(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) bits[i] = orders[i].before(x, y);
  return bits;
}

VerificationReport verify(const Poset& poset, const BooleanRealizer& realizer) {
  const std::size_t n = poset.size();
  const std::size_t s = realizer.size();
  if (!realizer.truth || realizer.truth->arity() != s) throw Error("truth function arity does not match the family");

  std::vector<std::vector<std::size_t>> pos(s, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < s; ++i) {
    for (ElementId x = 0; x < n; ++x) pos[i][x] = realizer.orders[i].position(x);
  }

  struct Witness {
    ElementPair less_pair;
    ElementPair other_pair;
    bool has_less = false;
    bool has_other = false;
    bool reported = false;
  };
  std::unordered_map<Bits, Witness> seen;
  VerificationReport report;
  Bits bits(s);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (x == y) continue;
      for (std::size_t i = 0; i < s; ++i) bits[i] = pos[i][x] < pos[i][y];
      const bool expected = poset.less(x, y);
      const bool got = realizer.truth->evaluate(bits);
      if (expected != got) report.pair_errors.push_back({x, y, expected, got});

      Witness& w = seen[bits];
      if (expected && !w.has_less) {
        w.less_pair = {x, y};
        w.has_less = true;
      } else if (!expected && !w.has_other) {
        w.other_pair = {x, y};
        w.has_other = true;
      }
      if (w.has_less && w.has_other && !w.reported) {
        w.reported = true;
        report.collisions.push_back({bits, w.less_pair, w.other_pair});
      }
    }
  }
  return report;
}

BooleanRealizer and_realizer(const Realizer& realizer) {
  return {realizer.extensions, std::make_shared<AndTruth>(realizer.size())};
}

}  // namespace bdim
