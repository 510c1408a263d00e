#pragma once

#include <istream>
#include <string>

#include "json.hpp"

#include "bdim/block_realizer.hpp"
#include "bdim/boolean_realizer.hpp"
#include "bdim/decomposition.hpp"
#include "bdim/poset.hpp"

namespace bdim {

/// "poset <n>" then one "a b" line per relation a < b; '#' starts a comment.
/// ParseError messages name the offending line.
Poset parse_poset(std::istream& in);
Poset read_poset_file(const std::string& path);

/// Writes the cover pairs, which generate the poset.
std::string format_poset(const Poset& poset);

nlohmann::json realizer_to_json(const BooleanRealizer& realizer);
BooleanRealizer realizer_from_json(const nlohmann::json& doc);
TruthPtr truth_from_json(const nlohmann::json& truth);

nlohmann::json report_to_json(const VerificationReport& report);

std::string cover_graph_dot(const Poset& poset);
std::string root_digraph_dot(const RootDigraph& digraph);
std::string block_tree_dot(const BlockDecomposition& bd, const BlockTree& tree);

}  // namespace bdim
