#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "bdim/commands.hpp"
#include "bdim/errors.hpp"

namespace {

std::optional<std::string> maybe(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean realizers for posets built from components and blocks"};
  app.require_subcommand(1);

  std::string poset_path, realizer_path, out, dot, method = "blocks";
  std::size_t dmax = 4;
  std::uint64_t bound_n = 1;
  bdim::GenOptions gen;

  auto* analyze = app.add_subcommand("analyze", "components, blocks, roots and dimension of a poset file");
  analyze->add_option("poset", poset_path)->required();
  analyze->add_option("--dot", dot, "prefix for DOT exports");

  auto* build = app.add_subcommand("build", "build and verify a Boolean realizer");
  build->add_option("poset", poset_path)->required();
  build->add_option("--method", method)->check(CLI::IsMember({"components", "blocks"}));
  build->add_option("--dmax", dmax, "largest inner dimension to search");
  build->add_option("--out", out, "where to write the realizer JSON");

  auto* check = app.add_subcommand("verify", "check a realizer JSON against a poset file");
  check->add_option("poset", poset_path)->required();
  check->add_option("realizer", realizer_path)->required();

  auto* generate = app.add_subcommand("gen", "write a generated poset file");
  generate->add_option("kind", gen.kind)->required()->check(CLI::IsMember({"standard", "forest", "pn", "block-glue"}));
  generate->add_option("--n", gen.n);
  generate->add_option("--t", gen.t, "number of blocks for block-glue");
  generate->add_option("--max-block", gen.max_block);
  generate->add_option("--seed", gen.seed);
  generate->add_option("--out", out);

  auto* bound = app.add_subcommand("bound", "least family size allowed by the counting argument");
  bound->add_option("n", bound_n)->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : bdim::kInputError;
  }

  try {
    bdim::CommandResult result;
    if (*analyze) {
      result = bdim::cmd_analyze(poset_path, maybe(dot));
    } else if (*build) {
      result = bdim::cmd_build(poset_path, method, dmax, maybe(out));
    } else if (*check) {
      result = bdim::cmd_verify(poset_path, realizer_path);
    } else if (*generate) {
      result = bdim::cmd_gen(gen, maybe(out));
      if (out.empty()) {
        std::cout << result.report["poset"].get<std::string>();
        return result.exit_code;
      }
    } else {
      result = bdim::cmd_bound(bound_n);
    }
    std::cout << result.report.dump(2) << '\n';
    return result.exit_code;
  } catch (const bdim::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bdim::kInputError;
  }
}
