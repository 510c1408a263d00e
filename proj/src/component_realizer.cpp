#include "bdim/component_realizer.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "bdim/coding.hpp"
#include "bdim/decomposition.hpp"

namespace bdim {

std::size_t FamilyLayout::add(std::string name, std::size_t length) {
  const std::size_t offset = total();
  slices.push_back({std::move(name), offset, length});
  return offset;
}

const FamilyLayout::Slice& FamilyLayout::at(const std::string& name) const {
  for (const auto& s : slices) {
    if (s.name == name) return s;
  }
  throw Error("layout has no family " + name);
}

std::size_t FamilyLayout::total() const { return slices.empty() ? 0 : slices.back().offset + slices.back().length; }

BooleanRealizer pad_realizer(const BooleanRealizer& realizer, std::size_t size) {
  if (realizer.size() == size) return realizer;
  if (realizer.size() == 0 || realizer.size() > size) throw Error("cannot pad a realizer to a smaller size");
  const auto table = tabulate(*realizer.truth);
  const std::size_t low = table.size() - 1;
  std::vector<bool> padded(std::size_t{1} << size);
  for (std::size_t code = 0; code < padded.size(); ++code) padded[code] = table[code & low];
  BooleanRealizer out{realizer.orders, std::make_shared<TableTruth>(size, std::move(padded))};
  out.orders.resize(size, realizer.orders.back());
  return out;
}

ComponentRealizerInput pad_realizers(ComponentRealizerInput input) {
  std::size_t d = 0;
  for (const auto& r : input.realizers) d = std::max(d, r.size());
  for (auto& r : input.realizers) r = pad_realizer(r, d);
  return input;
}

TruthCatalog truth_catalog(const std::vector<BooleanRealizer>& realizers) {
  TruthCatalog catalog;
  std::map<std::vector<bool>, std::size_t> seen;
  for (const auto& r : realizers) {
    auto table = tabulate(*r.truth);
    auto [it, fresh] = seen.emplace(table, catalog.tables.size());
    if (fresh) catalog.tables.push_back(std::move(table));
    catalog.index_of.push_back(it->second);
  }
  return catalog;
}

ComponentsTruth::ComponentsTruth(FamilyLayout layout, std::size_t d, std::vector<std::vector<bool>> catalog)
    : layout_(std::move(layout)), d_(d), r_(code_length(catalog.size())), catalog_(std::move(catalog)) {}

bool ComponentsTruth::evaluate(const Bits& bits) const {
  const auto& f1 = layout_.slices[0];
  if (!lemma1_same(bits[f1.offset], bits[f1.offset + 1])) return false;
  const auto codes = lemma2_decode(bits, layout_.slices[1].offset, r_, catalog_.size());
  if (!codes || codes->first != codes->second) return false;
  return catalog_[codes->first][bits_index(bits, layout_.slices[2].offset, d_)];
}

nlohmann::json ComponentsTruth::metadata() const {
  nlohmann::json layout = nlohmann::json::object();
  for (const auto& s : layout_.slices) layout[s.name] = {{"offset", s.offset}, {"length", s.length}};
  nlohmann::json catalog = nlohmann::json::array();
  for (const auto& t : catalog_) catalog.push_back(table_string(t));
  return {{"d", d_}, {"r", r_}, {"layout", layout}, {"catalog", catalog}};
}

BooleanRealizer build_component_realizer(const ComponentRealizerInput& raw) {
  const auto comps = components(raw.poset);
  if (comps.size() < 2) throw SingleComponentError("poset has a single component");
  if (raw.pieces != comps || raw.realizers.size() != comps.size()) {
    throw Error("pieces must be the components in ascending order with one realizer each");
  }
  const ComponentRealizerInput input = pad_realizers(raw);
  const std::size_t n = input.poset.size();
  const std::size_t d = input.realizers.front().size();
  const TruthCatalog catalog = truth_catalog(input.realizers);

  std::vector<std::size_t> phi1(n), phi2(n);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (ElementId x : comps[c]) {
      phi1[x] = c;
      phi2[x] = catalog.index_of[c];
    }
  }
  const std::size_t r = code_length(catalog.tables.size());

  BooleanRealizer out;
  FamilyLayout layout;
  layout.add("F1", 2);
  layout.add("F2", 4 * r);
  layout.add("F3", d);
  for (auto& o : lemma1_family(phi1)) out.orders.push_back(std::move(o));
  for (auto& o : lemma2_orders(phi2, r)) out.orders.push_back(std::move(o));
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<ElementId> seq;
    seq.reserve(n);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (ElementId local : input.realizers[c].orders[j].elements()) seq.push_back(comps[c][local]);
    }
    out.orders.emplace_back(std::move(seq));
  }
  out.truth = std::make_shared<ComponentsTruth>(std::move(layout), d, catalog.tables);
  return out;
}

ComponentRealizerInput and_inputs(const Poset& poset, std::vector<ElementSet> pieces, std::size_t max_dimension) {
  ComponentRealizerInput input{poset, std::move(pieces), {}};
  for (const auto& piece : input.pieces) {
    auto r = minimum_realizer(poset.induced(piece), max_dimension);
    if (!r) throw BudgetError("a piece has dimension above " + std::to_string(max_dimension));
    input.realizers.push_back(and_realizer(*r));
  }
  return input;
}

namespace {

// Exact test of (2n)!^s * 2^(2^s) >= 2^(n^2).
bool exact_inequality(std::uint64_t n, std::uint64_t s) {
  const std::uint64_t need = n * n;
  if (s < 64 && (std::uint64_t{1} << s) >= need) return true;
  mpz_t lhs;
  mpz_init(lhs);
  mpz_fac_ui(lhs, 2 * n);
  mpz_pow_ui(lhs, lhs, s);
  // Compare (2n)!^s with 2^(n^2 - 2^s).
  const std::uint64_t exponent = need - (std::uint64_t{1} << s);
  const bool holds = mpz_sizeinbase(lhs, 2) > exponent;  // value >= 2^exponent iff bit length > exponent
  mpz_clear(lhs);
  return holds;
}

// Sign of s * log2((2n)!) + 2^s - n^2 at 256 bits, exact arithmetic when too close to call.
class CountingInequality {
 public:
  explicit CountingInequality(std::uint64_t n) : n_(n) {
    mpfr_inits2(256, log_fact_, margin_, static_cast<mpfr_ptr>(nullptr));
    mpfr_t ln2;
    mpfr_init2(ln2, 256);
    mpfr_set_ui(log_fact_, 2 * n + 1, MPFR_RNDN);
    mpfr_lngamma(log_fact_, log_fact_, MPFR_RNDN);
    mpfr_const_log2(ln2, MPFR_RNDN);
    mpfr_div(log_fact_, log_fact_, ln2, MPFR_RNDN);
    mpfr_clear(ln2);
  }
  ~CountingInequality() { mpfr_clears(log_fact_, margin_, static_cast<mpfr_ptr>(nullptr)); }
  CountingInequality(const CountingInequality&) = delete;
  CountingInequality& operator=(const CountingInequality&) = delete;

  bool holds(std::uint64_t s) {
    if (s >= 64) return true;
    mpfr_mul_ui(margin_, log_fact_, s, MPFR_RNDN);
    mpfr_add_ui(margin_, margin_, std::uint64_t{1} << s, MPFR_RNDN);
    mpfr_sub_ui(margin_, margin_, n_ * n_, MPFR_RNDN);
    const double margin = mpfr_get_d(margin_, MPFR_RNDN);
    if (std::fabs(margin) > 1e-9) return margin > 0;
    return exact_inequality(n_, s);
  }

 private:
  std::uint64_t n_;
  mpfr_t log_fact_, margin_;
};

}  // namespace

bool counting_inequality_holds(std::uint64_t n, std::uint64_t s) { return CountingInequality(n).holds(s); }

std::uint64_t min_orders_lower_bound(std::uint64_t n) {
  if (n == 0) throw Error("n must be positive");
  CountingInequality inequality(n);
  std::uint64_t s = 1;
  while (!inequality.holds(s)) ++s;
  return s;
}

Poset sample_pn(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error("n must be positive");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<ElementPair> rel;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (coin(rng)) rel.emplace_back(static_cast<ElementId>(i), static_cast<ElementId>(n + j));
    }
  }
  return Poset::from_relations(2 * n, rel);
}

}  // namespace bdim
