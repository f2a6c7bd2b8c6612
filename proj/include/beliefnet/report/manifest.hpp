#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace beliefnet::report {

/// Provenance record written once by every artifact-producing command.
struct RunManifest {
  std::string command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::uint64_t seed = 0;
  bool seed_from_entropy = false;
  std::map<std::string, std::string> inputs;  // workspace-relative path -> FNV-1a hash
  std::string version;
  std::string started;   // UTC, ISO 8601
  double elapsed_seconds = 0.0;
  std::vector<std::string> outputs;  // workspace-relative paths

  nlohmann::ordered_json to_json() const;
  static RunManifest from_json(const nlohmann::ordered_json& j);
};

std::string utc_timestamp();

}  // namespace beliefnet::report
