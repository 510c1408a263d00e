#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#include "bdim/block_realizer.hpp"
#include "bdim/commands.hpp"
#include "bdim/component_realizer.hpp"
#include "bdim/generators.hpp"
#include "bdim/serialization.hpp"

using namespace bdim;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("bdim-test-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& text) const {
    const auto p = (path / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::string at(const std::string& name) const { return (path / name).string(); }
};

Poset parse(const std::string& text) {
  std::istringstream in(text);
  return parse_poset(in);
}

std::string parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

int run(const std::string& args) {
  const std::string cmd = std::string(BDIM_EXE) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("poset files") {
  const Poset p = parse("# a chain\nposet 3\n0 1  # first\n\n1 2\n");
  CHECK(p.less(0, 2));
  CHECK(parse_error("poset 3\n0 1\n0 x\n").find("line 3") != std::string::npos);
  CHECK(parse_error("poset 2\n0 5\n").find("line 2") != std::string::npos);
  CHECK(parse_error("poset 2\n1 1\n").find("line 2") != std::string::npos);
  CHECK(parse_error("poset 2\n0 1 7\n").find("line 2") != std::string::npos);
  CHECK(parse_error("\n\nchain 3\n").find("line 3") != std::string::npos);
  CHECK_FALSE(parse_error("# nothing\n").empty());
  CHECK_FALSE(parse_error("poset 2\n0 1\n1 0\n").empty());
}

TEST_CASE("generated files parse back") {
  Rng rng(113);
  for (int k = 0; k < 40; ++k) {
    const Poset p = k % 2 ? random_poset(1 + k, 0.2, rng) : block_glue(1 + k % 6, 6, rng);
    CHECK(parse(format_poset(p)) == p);
  }
}

TEST_CASE("realizer JSON round trip") {
  Rng rng(127);
  std::vector<std::pair<Poset, BooleanRealizer>> cases;
  const Poset s3 = standard_example(3);
  cases.emplace_back(s3, and_realizer(*minimum_realizer(s3, 3)));
  const BooleanRealizer table{cases.back().second.orders, std::make_shared<TableTruth>(3, tabulate(AndTruth(3)))};
  cases.emplace_back(s3, table);
  const Poset parts = shuffle_labels(disjoint_sum({random_connected_poset(4, 0.5, rng), random_poset(3, 0.5, rng)}), rng);
  cases.emplace_back(parts, build_component_realizer(and_inputs(parts, components(parts), 4)));
  const Poset glued = block_glue(4, 6, rng);
  const auto bd = block_decomposition(glued);
  cases.emplace_back(glued, build_block_realizer({glued, bd, and_block_realizers(glued, bd, 4)}));
  const Poset two = shuffle_labels(disjoint_sum({block_glue(2, 5, rng), block_glue(3, 5, rng)}), rng);
  std::vector<std::vector<BooleanRealizer>> inner;
  for (const auto& part : component_blocks(two)) inner.push_back(and_block_realizers(part.poset, part.decomposition, 4));
  cases.emplace_back(two, build_general_realizer(two, inner));

  for (const auto& [p, r] : cases) {
    const auto doc = realizer_to_json(r);
    const auto back = realizer_from_json(nlohmann::json::parse(doc.dump()));
    CHECK(back.truth->procedure() == r.truth->procedure());
    CHECK(back.orders == r.orders);
    CHECK(verify(p, back).pass());
    for (ElementId x = 0; x < p.size(); ++x) {
      for (ElementId y = 0; y < p.size(); ++y) {
        if (x == y) continue;
        const Bits b = query_bits(r.orders, x, y);
        CHECK(back.truth->evaluate(b) == r.truth->evaluate(b));
      }
    }
  }
  CHECK_THROWS_AS(realizer_from_json(nlohmann::json::parse(R"({"orders": [[0, 1]], "truth": {"procedure": "magic"}})")),
                  ParseError);
}

TEST_CASE("DOT exports") {
  const Poset chain = parse("poset 3\n0 1\n1 2\n");
  const auto bd = block_decomposition(chain);
  CHECK(cover_graph_dot(chain).find("graph") != std::string::npos);
  CHECK(cover_graph_dot(chain).find("0 -- 1") != std::string::npos);
  CHECK(root_digraph_dot(root_digraph(chain, bd)).find("1 -> 2") != std::string::npos);
  CHECK(block_tree_dot(bd, block_tree(bd)).find("digraph") != std::string::npos);
}

TEST_CASE("analyze") {
  TempDir dir;
  const auto chain = cmd_analyze(dir.file("chain.txt", "poset 3\n0 1\n1 2\n"), dir.at("chain"));
  CHECK(chain.exit_code == kPass);
  CHECK(chain.report["components"].size() == 1);
  CHECK(chain.report["dimension"] == 1);
  CHECK(fs::exists(dir.at("chain.cover.dot")));
  CHECK(fs::exists(dir.at("chain.tree.dot")));

  const auto s3 = cmd_analyze(dir.file("s3.txt", format_poset(standard_example(3))), std::nullopt);
  CHECK(s3.report["dimension"] == 3);

  try {
    cmd_analyze(dir.file("bad.txt", "poset 3\n0 1\n1 two\n"), std::nullopt);
    FAIL("malformed file accepted");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("build and verify") {
  TempDir dir;
  const auto chains = dir.file("chains.txt", "poset 4\n0 1\n2 3\n");
  const auto built = cmd_build(chains, "components", 4, dir.at("chains.json"));
  CHECK(built.exit_code == kPass);
  CHECK(built.report["verification"]["pass"] == true);
  CHECK(cmd_verify(chains, dir.at("chains.json")).exit_code == kPass);

  Rng rng(131);
  const auto glued = dir.file("glued.txt", format_poset(block_glue(4, 6, rng)));
  CHECK(cmd_build(glued, "blocks", 4, dir.at("glued.json")).exit_code == kPass);
  CHECK(cmd_verify(glued, dir.at("glued.json")).exit_code == kPass);

  const auto apart = dir.file("apart.txt", format_poset(disjoint_sum({block_glue(2, 5, rng), block_glue(2, 5, rng)})));
  const auto general = cmd_build(apart, "blocks", 4, dir.at("apart.json"));
  CHECK(general.exit_code == kPass);
  std::ifstream written(dir.at("apart.json"));
  CHECK(nlohmann::json::parse(written)["truth"]["procedure"] == "general");

  // Swap two elements in one order: some pair must now be answered wrongly.
  std::ifstream in(dir.at("glued.json"));
  auto doc = nlohmann::json::parse(in);
  auto& order = doc["orders"][0];
  std::swap(order[0], order[order.size() - 1]);
  const auto corrupted = dir.file("corrupted.json", doc.dump());
  const auto bad = cmd_verify(glued, corrupted);
  CHECK(bad.exit_code == kVerificationFailed);
  CHECK_FALSE(bad.report["verification"]["pair_errors"].empty());

  // A single order cannot separate 0 < 1 from 0 || 2.
  const auto triple = dir.file("triple.txt", "poset 3\n0 1\n");
  const auto one = dir.file("one.json", R"({"orders": [[0, 1, 2]], "truth": {"procedure": "and", "metadata": {"arity": 1}}})");
  const auto clash = cmd_verify(triple, one);
  CHECK(clash.exit_code == kVerificationFailed);
  CHECK_FALSE(clash.report["verification"]["collisions"].empty());

  CHECK_THROWS_AS(cmd_verify(triple, dir.file("short.json", R"({"orders": [[0, 1]], "truth": {"procedure": "and", "metadata": {"arity": 1}}})")),
                  ParseError);
}

TEST_CASE("generators") {
  TempDir dir;
  const auto s4 = cmd_gen({"standard", 4, 3, 6, 1}, dir.at("s4.txt"));
  CHECK(read_poset_file(dir.at("s4.txt")) == standard_example(4));
  CHECK(s4.report["n"] == 8);

  const auto glue = cmd_gen({"block-glue", 4, 5, 6, 7}, std::nullopt);
  const Poset g = parse(glue.report["poset"].get<std::string>());
  CHECK(block_decomposition(g).size() == 5);

  const auto forest = cmd_gen({"forest", 30, 3, 6, 9}, std::nullopt);
  const Poset f = parse(forest.report["poset"].get<std::string>());
  CHECK(f.size() == 30);
  CHECK(forest_realizer3(f).size() <= 3);

  const auto pn = cmd_gen({"pn", 5, 3, 6, 11}, std::nullopt);
  CHECK(parse(pn.report["poset"].get<std::string>()) == sample_pn(5, 11));

  CHECK(cmd_bound(1).report["min_orders"] == 1);
}

TEST_CASE("exit codes of the command-line tool") {
  TempDir dir;
  const auto chains = dir.file("chains.txt", "poset 4\n0 1\n2 3\n");
  CHECK(run("bound 100") == kPass);
  CHECK(run("build " + chains + " --method components --out " + dir.at("r.json")) == kPass);
  CHECK(run("verify " + chains + " " + dir.at("r.json")) == kPass);
  CHECK(run("analyze " + dir.file("bad.txt", "poset 2\n0 9\n")) == kInputError);
  CHECK(run("analyze " + dir.at("missing.txt")) == kInputError);
  CHECK(run("build " + chains + " --method nonsense") == kInputError);
  CHECK(run("gen standard --n 3 --out " + dir.at("s3.txt")) == kPass);

  std::ifstream in(dir.at("r.json"));
  auto doc = nlohmann::json::parse(in);
  auto& order = doc["orders"][doc["orders"].size() - 1];
  std::swap(order[0], order[1]);
  CHECK(run("verify " + chains + " " + dir.file("bad.json", doc.dump())) == kVerificationFailed);
}
