#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

namespace bdim {

/// Exit codes shared by every command.
enum ExitCode : int { kPass = 0, kVerificationFailed = 1, kInputError = 2 };

struct CommandResult {
  nlohmann::json report;
  int exit_code = kPass;
};

/// Components, blocks, roots, Z-parts, and the exact dimension when n <= 10.
/// With `dot_prefix`, writes <prefix>.cover.dot and, for connected posets,
/// <prefix>.roots.dot and <prefix>.tree.dot.
CommandResult cmd_analyze(const std::string& path, const std::optional<std::string>& dot_prefix);

/// method is "components" or "blocks". The realizer is verified before it is
/// written to `out`; a failing realizer is never written.
CommandResult cmd_build(const std::string& path, const std::string& method, std::size_t max_dimension,
                        const std::optional<std::string>& out);

CommandResult cmd_verify(const std::string& poset_path, const std::string& realizer_path);

struct GenOptions {
  std::string kind;  // standard | forest | pn | block-glue
  std::size_t n = 4;
  std::size_t t = 3;
  std::size_t max_block = 6;
  std::uint64_t seed = 1;
};

/// Returns the poset file text in report["poset"], and writes it to `out` if given.
CommandResult cmd_gen(const GenOptions& options, const std::optional<std::string>& out);

CommandResult cmd_bound(std::uint64_t n);

}  // namespace bdim
