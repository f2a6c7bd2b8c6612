#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "beliefnet/core/dag.hpp"
#include "beliefnet/core/network.hpp"

namespace beliefnet {

inline constexpr std::string_view kModelFormat = "beliefnet-model";
inline constexpr int kModelVersion = 1;

/// Model file text (JSON, see docs/model-format.md). Doubles are written with
/// round-trip precision so deserialize(serialize(net)) is bit-identical.
std::string serialize(const FittedNetwork& net);

/// Parses a model file. Rows off by more than 1e-12 but within 1e-9 are
/// renormalized with a warning; larger deviations are rejected.
/// Throws MalformedFile (index() = byte offset when known) or VersionMismatch.
FittedNetwork deserialize(std::string_view text);

FittedNetwork load_model(const std::filesystem::path& path);
void save_model(const FittedNetwork& net, const std::filesystem::path& path);

/// Graphviz DOT text; every node and arc appears exactly once. With a color
/// map, each listed node gets `style=filled, fillcolor="<color>"`.
std::string export_dot(const Dag& dag,
                       const std::map<std::string, std::string>& node_colors = {});

}  // namespace beliefnet
