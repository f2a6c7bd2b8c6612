#include "beliefnet/report/manifest.hpp"

#include <chrono>
#include <ctime>

namespace beliefnet::report {

nlohmann::ordered_json RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["version"] = version;
  j["seed"] = seed;
  j["seed_from_entropy"] = seed_from_entropy;
  j["config"] = config;
  j["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [path, hash] : inputs) j["inputs"][path] = hash;
  j["outputs"] = outputs;
  j["started"] = started;
  j["elapsed_seconds"] = elapsed_seconds;
  return j;
}

RunManifest RunManifest::from_json(const nlohmann::ordered_json& j) {
  RunManifest m;
  m.command = j.at("command").get<std::string>();
  m.version = j.at("version").get<std::string>();
  m.seed = j.at("seed").get<std::uint64_t>();
  m.seed_from_entropy = j.value("seed_from_entropy", false);
  m.config = j.at("config");
  for (const auto& [path, hash] : j.at("inputs").items()) m.inputs[path] = hash.get<std::string>();
  m.outputs = j.at("outputs").get<std::vector<std::string>>();
  m.started = j.value("started", "");
  m.elapsed_seconds = j.value("elapsed_seconds", 0.0);
  return m;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace beliefnet::report
