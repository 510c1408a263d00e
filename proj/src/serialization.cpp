#include "bdim/serialization.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bdim/component_realizer.hpp"

namespace bdim {

namespace {

[[noreturn]] void fail_line(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::vector<bool> parse_table(const std::string& text) {
  std::vector<bool> table;
  for (char c : text) {
    if (c != '0' && c != '1') throw ParseError("truth table must be a 0/1 string");
    table.push_back(c == '1');
  }
  return table;
}

FamilyLayout parse_layout(const nlohmann::json& doc) {
  std::vector<FamilyLayout::Slice> slices;
  for (const auto& [name, slice] : doc.items()) {
    slices.push_back({name, slice.at("offset").get<std::size_t>(), slice.at("length").get<std::size_t>()});
  }
  std::sort(slices.begin(), slices.end(), [](const auto& a, const auto& b) { return a.offset < b.offset; });
  FamilyLayout layout;
  for (const auto& s : slices) {
    if (layout.total() != s.offset) throw ParseError("layout families are not contiguous");
    layout.add(s.name, s.length);
  }
  return layout;
}

std::string edge_list(const char* kind, const char* arrow, const std::vector<ElementPair>& edges, std::size_t n) {
  std::ostringstream out;
  out << kind << " G {\n";
  for (std::size_t x = 0; x < n; ++x) out << "  " << x << ";\n";
  for (const auto& [a, b] : edges) out << "  " << a << ' ' << arrow << ' ' << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

Poset parse_poset(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  std::optional<std::size_t> n;
  std::vector<ElementPair> rel;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::string first;
    if (!(fields >> first)) continue;
    if (!n) {
      long long count = 0;
      if (first != "poset" || !(fields >> count) || count < 1) fail_line(line, "expected header 'poset <n>' with n >= 1");
      n = static_cast<std::size_t>(count);
      std::string extra;
      if (fields >> extra) fail_line(line, "unexpected trailing text '" + extra + "'");
    } else {
      long long a = -1, b = -1;
      std::istringstream pair(raw);
      if (!(pair >> a >> b)) fail_line(line, "expected two element indices");
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= *n || static_cast<std::size_t>(b) >= *n) {
        fail_line(line, "element index out of range");
      }
      if (a == b) fail_line(line, "an element cannot lie below itself");
      std::string extra;
      if (pair >> extra) fail_line(line, "unexpected trailing text '" + extra + "'");
      rel.emplace_back(static_cast<ElementId>(a), static_cast<ElementId>(b));
    }
  }
  if (!n) throw ParseError("missing 'poset <n>' header");
  try {
    return Poset::from_relations(*n, rel);
  } catch (const CycleError& e) {
    throw ParseError(std::string("relations are not a partial order: ") + e.what());
  }
}

Poset read_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_poset(in);
}

std::string format_poset(const Poset& poset) {
  std::ostringstream out;
  out << "poset " << poset.size() << '\n';
  for (const auto& [a, b] : cover_pairs(poset)) out << a << ' ' << b << '\n';
  return out.str();
}

nlohmann::json realizer_to_json(const BooleanRealizer& realizer) {
  nlohmann::json orders = nlohmann::json::array();
  for (const auto& o : realizer.orders) orders.push_back(o.elements());
  nlohmann::json doc = {
      {"n", realizer.orders.empty() ? 0 : realizer.orders.front().size()},
      {"size", realizer.size()},
      {"orders", orders},
      {"truth", {{"procedure", realizer.truth->procedure()}, {"metadata", realizer.truth->metadata()}}},
  };
  const auto meta = realizer.truth->metadata();
  if (meta.contains("layout")) doc["layout"] = meta["layout"];
  return doc;
}

TruthPtr truth_from_json(const nlohmann::json& truth) {
  const auto procedure = truth.at("procedure").get<std::string>();
  const auto& meta = truth.at("metadata");
  if (procedure == "and") return std::make_shared<AndTruth>(meta.at("arity").get<std::size_t>());
  if (procedure == "table") {
    return std::make_shared<TableTruth>(meta.at("arity").get<std::size_t>(), parse_table(meta.at("table")));
  }
  std::vector<std::vector<bool>> catalog;
  for (const auto& t : meta.at("catalog")) catalog.push_back(parse_table(t.get<std::string>()));
  const auto d = meta.at("d").get<std::size_t>();
  for (const auto& t : catalog) {
    if (t.size() != (std::size_t{1} << d)) throw ParseError("catalog table length does not match d");
  }
  FamilyLayout layout = parse_layout(meta.at("layout"));
  if (procedure == "components") return std::make_shared<ComponentsTruth>(std::move(layout), d, std::move(catalog));
  if (procedure == "blocks" || procedure == "general") {
    return std::make_shared<BlocksTruth>(std::move(layout), d, std::move(catalog));
  }
  throw ParseError("unknown truth procedure '" + procedure + "'");
}

BooleanRealizer realizer_from_json(const nlohmann::json& doc) {
  try {
    BooleanRealizer r;
    for (const auto& o : doc.at("orders")) r.orders.emplace_back(o.get<std::vector<ElementId>>());
    r.truth = truth_from_json(doc.at("truth"));
    if (r.truth->arity() != r.size()) throw ParseError("truth arity does not match the number of orders");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed realizer: ") + e.what());
  }
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json errors = nlohmann::json::array();
  for (const auto& e : report.pair_errors) errors.push_back({e.x, e.y, e.expected, e.got});
  nlohmann::json collisions = nlohmann::json::array();
  for (const auto& c : report.collisions) {
    std::string bits;
    for (bool b : c.bits) bits.push_back(b ? '1' : '0');
    collisions.push_back({{"bits", bits},
                          {"less_pair", {c.less_pair.first, c.less_pair.second}},
                          {"other_pair", {c.other_pair.first, c.other_pair.second}}});
  }
  return {{"pass", report.pass()}, {"pair_errors", errors}, {"collisions", collisions}};
}

std::string cover_graph_dot(const Poset& poset) {
  return edge_list("graph", "--", cover_pairs(poset), poset.size());
}

std::string root_digraph_dot(const RootDigraph& digraph) {
  return edge_list("digraph", "->", digraph.edges, digraph.n);
}

std::string block_tree_dot(const BlockDecomposition& bd, const BlockTree& tree) {
  std::ostringstream out;
  out << "digraph T {\n";
  for (std::size_t i = 0; i < bd.size(); ++i) {
    out << "  Z" << i << " [label=\"Z" << i << ": ";
    for (std::size_t k = 0; k < bd.zparts[i].size(); ++k) out << (k ? " " : "") << bd.zparts[i][k];
    out << "\"];\n";
  }
  for (std::size_t i = 0; i < bd.size(); ++i) {
    for (std::size_t c : tree.children[i]) out << "  Z" << i << " -> Z" << c << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bdim
