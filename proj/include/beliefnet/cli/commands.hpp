#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace beliefnet::cli {

/// Flags shared by every command.
struct GlobalOptions {
  std::filesystem::path workspace = ".";
  std::optional<std::uint64_t> seed;
  std::filesystem::path config;  // empty when not given
  int workers = 0;               // 0 = hardware concurrency
  bool force = false;
  bool timestamp = true;  // embed a timestamp in SVG output
};

struct PrepOptions {
  std::filesystem::path input;
  std::string population = "all";  // all, full, risk or opportunity
};

struct LearnOptions {
  std::string data;  // table name under data/ or a .csv path
  std::optional<int> bootstrap;
  std::string name;  // output stem; defaults to the data stem
};

struct FitOptions {
  std::string model;
  std::string data;
  std::optional<double> alpha;
  bool mle = false;
  std::string name;
};

struct ModelOptions {
  std::string model;  // model name under models/ or a .json path
};

/// Bad or missing command-line input (exit code 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Each command returns 0 and reports written files on `out`; failures are
// thrown as beliefnet::Error.
int cmd_prep(const GlobalOptions& global, const PrepOptions& options, std::ostream& out);
int cmd_learn(const GlobalOptions& global, const LearnOptions& options, std::ostream& out);
int cmd_fit(const GlobalOptions& global, const FitOptions& options, std::ostream& out);
int cmd_query(const GlobalOptions& global, const ModelOptions& options, std::ostream& out);
int cmd_sobol(const GlobalOptions& global, const ModelOptions& options, std::ostream& out);
int cmd_scenario(const GlobalOptions& global, const ModelOptions& options, std::ostream& out);
int cmd_sensitivity(const GlobalOptions& global, const ModelOptions& options,
                    std::ostream& out);
int cmd_export(const GlobalOptions& global, const ModelOptions& options, std::ostream& out);

}  // namespace beliefnet::cli
