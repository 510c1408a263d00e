#include "bdim/commands.hpp"

#include <chrono>
#include <fstream>

#include "bdim/block_realizer.hpp"
#include "bdim/component_realizer.hpp"
#include "bdim/decomposition.hpp"
#include "bdim/generators.hpp"
#include "bdim/oracles.hpp"
#include "bdim/serialization.hpp"

namespace bdim {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

nlohmann::json sets_json(const std::vector<ElementSet>& sets) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : sets) out.push_back(s);
  return out;
}

std::size_t max_inner_size(const std::vector<BooleanRealizer>& realizers) {
  std::size_t d = 0;
  for (const auto& r : realizers) d = std::max(d, r.size());
  return d;
}

nlohmann::json family_sizes(const BooleanRealizer& realizer) {
  nlohmann::json sizes = nlohmann::json::object();
  const auto meta = realizer.truth->metadata();
  if (meta.contains("layout")) {
    for (const auto& [name, slice] : meta["layout"].items()) sizes[name] = slice["length"];
  }
  return sizes;
}

}  // namespace

CommandResult cmd_analyze(const std::string& path, const std::optional<std::string>& dot_prefix) {
  const auto start = Clock::now();
  const Poset poset = read_poset_file(path);
  nlohmann::json report;
  report["n"] = poset.size();
  report["relations"] = poset.relation_count();
  report["cover_edges"] = cover_pairs(poset).size();
  const auto comps = components(poset);
  report["components"] = sets_json(comps);

  nlohmann::json per = nlohmann::json::array();
  for (const auto& part : component_blocks(poset)) {
    const auto& bd = part.decomposition;
    auto global = [&](const ElementSet& local) {
      ElementSet out;
      for (ElementId a : local) out.push_back(part.elements[a]);
      return out;
    };
    nlohmann::json blocks = nlohmann::json::array(), zparts = nlohmann::json::array(), roots = nlohmann::json::array();
    for (std::size_t i = 0; i < bd.size(); ++i) {
      blocks.push_back(global(bd.blocks[i]));
      zparts.push_back(global(bd.zparts[i]));
      roots.push_back(i == 0 ? nlohmann::json(nullptr) : nlohmann::json(part.elements[bd.root(i)]));
    }
    per.push_back({{"blocks", blocks}, {"roots", roots}, {"zparts", zparts}});
  }
  report["decomposition"] = per;

  if (poset.size() <= 10) {
    report["dimension"] = *exact_dimension(poset, poset.size());
  }
  if (dot_prefix) {
    write_file(*dot_prefix + ".cover.dot", cover_graph_dot(poset));
    if (comps.size() == 1) {
      const auto bd = block_decomposition(poset);
      write_file(*dot_prefix + ".roots.dot", root_digraph_dot(root_digraph(poset, bd)));
      write_file(*dot_prefix + ".tree.dot", block_tree_dot(bd, block_tree(bd)));
    }
  }
  report["seconds"] = seconds_since(start);
  return {report, kPass};
}

CommandResult cmd_build(const std::string& path, const std::string& method, std::size_t max_dimension,
                        const std::optional<std::string>& out) {
  const auto start = Clock::now();
  const Poset poset = read_poset_file(path);
  nlohmann::json report;
  report["n"] = poset.size();
  report["method"] = method;

  BooleanRealizer realizer;
  std::size_t d = 0;
  std::size_t bound = 0;
  if (method == "components") {
    const auto input = and_inputs(poset, components(poset), max_dimension);
    d = max_inner_size(input.realizers);
    realizer = build_component_realizer(input);
    bound = 2 + d + 4 * (std::size_t{1} << d);
    report["components"] = input.pieces.size();
  } else if (method == "blocks") {
    const auto parts = component_blocks(poset);
    std::vector<std::vector<BooleanRealizer>> inner;
    for (const auto& part : parts) {
      inner.push_back(and_block_realizers(part.poset, part.decomposition, max_dimension));
      d = std::max(d, max_inner_size(inner.back()));
    }
    if (parts.size() == 1) {
      realizer = build_block_realizer({poset, parts.front().decomposition, inner.front()});
      bound = 17 + d + 18 * (std::size_t{1} << d);
    } else {
      realizer = build_general_realizer(poset, inner);
      bound = 19 + d + 18 * (std::size_t{1} << d);
    }
    report["components"] = parts.size();
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& part : parts) blocks.push_back(part.decomposition.size());
    report["blocks"] = blocks;
  } else {
    throw Error("unknown method '" + method + "'");
  }

  const auto verification = verify(poset, realizer);
  report["d"] = d;
  report["size"] = realizer.size();
  report["bound"] = bound;
  report["slack"] = static_cast<long long>(bound) - static_cast<long long>(realizer.size());
  report["families"] = family_sizes(realizer);
  report["verification"] = report_to_json(verification);
  if (verification.pass() && out) write_file(*out, realizer_to_json(realizer).dump() + "\n");
  report["seconds"] = seconds_since(start);
  return {report, verification.pass() ? kPass : kVerificationFailed};
}

CommandResult cmd_verify(const std::string& poset_path, const std::string& realizer_path) {
  const auto start = Clock::now();
  const Poset poset = read_poset_file(poset_path);
  std::ifstream in(realizer_path);
  if (!in) throw ParseError("cannot open " + realizer_path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  const BooleanRealizer realizer = realizer_from_json(doc);
  for (const auto& o : realizer.orders) {
    if (o.size() != poset.size() || o.support().back() + 1 != poset.size()) {
      throw ParseError("every order must list each element of the poset once");
    }
  }
  const auto verification = verify(poset, realizer);
  nlohmann::json report = {{"n", poset.size()}, {"size", realizer.size()}, {"verification", report_to_json(verification)}};
  report["seconds"] = seconds_since(start);
  return {report, verification.pass() ? kPass : kVerificationFailed};
}

CommandResult cmd_gen(const GenOptions& options, const std::optional<std::string>& out) {
  Rng rng(options.seed);
  Poset poset;
  if (options.kind == "standard") {
    poset = standard_example(options.n);
  } else if (options.kind == "forest") {
    poset = random_forest_poset(options.n, 0.1, rng);
  } else if (options.kind == "pn") {
    poset = sample_pn(options.n, options.seed);
  } else if (options.kind == "block-glue") {
    poset = block_glue(options.t, options.max_block, rng);
  } else {
    throw Error("unknown generator '" + options.kind + "'");
  }
  const std::string text = format_poset(poset);
  if (out) write_file(*out, text);
  return {{{"kind", options.kind}, {"n", poset.size()}, {"seed", options.seed}, {"poset", text}}, kPass};
}

CommandResult cmd_bound(std::uint64_t n) {
  return {{{"n", n}, {"min_orders", min_orders_lower_bound(n)}}, kPass};
}

}  // namespace bdim
