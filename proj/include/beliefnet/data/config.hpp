#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "beliefnet/core/tiers.hpp"
#include "beliefnet/data/pipeline.hpp"
#include "json.hpp"

namespace beliefnet::config {

/// Parses a JSON config. Syntax errors become Config errors naming
/// `source:line:column`.
nlohmann::json parse(std::string_view text, const std::string& source);
nlohmann::json load(const std::filesystem::path& path);

// Semantic errors are Config errors naming `source` and the JSON path.
RecodeSpec recode_spec(const nlohmann::json& doc, const std::string& source);
std::vector<ThemeSpec> theme_specs(const nlohmann::json& doc, const std::string& source);
FramingLevels framing_levels(const nlohmann::json& doc, const std::string& source);
TierSpec tier_spec(const nlohmann::json& doc, const std::string& source);

RecodeSpec load_recode_spec(const std::filesystem::path& path);
std::vector<ThemeSpec> load_theme_specs(const std::filesystem::path& path);
TierSpec load_tier_spec(const std::filesystem::path& path);

}  // namespace beliefnet::config
