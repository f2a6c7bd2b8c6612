#include "beliefnet/cli/app.hpp"

#include <cstdlib>
#include <ostream>

#include "CLI11.hpp"
#include "beliefnet/cli/commands.hpp"
#include "beliefnet/core/error.hpp"

namespace beliefnet::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"beliefnet: discrete Bayesian networks for categorical survey data", "beliefnet"};
  app.set_version_flag("--version", BELIEFNET_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  std::string workspace;
  std::uint64_t seed = 0;
  bool no_timestamp = false;
  app.add_option("--workspace,-w", workspace,
                 std::string("Workspace directory (default: $") + kWorkspaceEnv + " or .)");
  auto* seed_opt = app.add_option("--seed", seed, "Master seed; drawn from entropy when absent");
  app.add_option("--config,-c", global.config, "Request or pipeline config (JSON)");
  app.add_option("--workers", global.workers, "Worker threads, 0 = all cores")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--force", global.force, "Overwrite existing outputs");
  app.add_flag("--no-timestamp", no_timestamp, "Omit the timestamp from SVG output");

  PrepOptions prep;
  auto* prep_cmd = app.add_subcommand("prep", "Recode a raw survey CSV into encoded tables");
  prep_cmd->add_option("--input,-i", prep.input, "Raw survey CSV")->required();
  prep_cmd->add_option("--population", prep.population, "all, full, risk or opportunity")
      ->check(CLI::IsMember({"all", "full", "risk", "opportunity"}));

  LearnOptions learn;
  int bootstrap = 0;
  auto* learn_cmd = app.add_subcommand("learn", "Learn a consensus network and fit it");
  learn_cmd->add_option("--data,-d", learn.data, "Table name under data/ or a CSV path")->required();
  auto* bootstrap_opt = learn_cmd->add_option("--bootstrap,-B", bootstrap,
                                              "Bootstrap replicates, 0 = one tabu search")
                            ->check(CLI::NonNegativeNumber);
  learn_cmd->add_option("--name", learn.name, "Output model name");

  FitOptions fit;
  double alpha = 1.0;
  auto* fit_cmd = app.add_subcommand("fit", "Refit the parameters of a model's structure");
  fit_cmd->add_option("--model,-m", fit.model, "Model providing the structure")->required();
  fit_cmd->add_option("--data,-d", fit.data, "Table name under data/ or a CSV path")->required();
  auto* alpha_opt = fit_cmd->add_option("--alpha", alpha, "Dirichlet pseudo-count")
                        ->check(CLI::PositiveNumber);
  fit_cmd->add_flag("--mle", fit.mle, "Maximum-likelihood estimates instead");
  fit_cmd->add_option("--name", fit.name, "Output model name");

  ModelOptions model;
  std::vector<std::pair<std::string, CLI::App*>> model_cmds;
  for (const auto& [name, help] :
       {std::pair{"query", "Conditional probability tables"},
        std::pair{"sobol", "First-order Sobol index matrix"},
        std::pair{"scenario", "Posteriors under named evidence scenarios"},
        std::pair{"sensitivity", "Tornado bars and node influence"},
        std::pair{"export", "Graphviz DOT of a model"}}) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("--model,-m", model.model, "Model name under models/ or a JSON path")
        ->required();
    model_cmds.emplace_back(name, cmd);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (!workspace.empty()) {
    global.workspace = workspace;
  } else if (const char* env = std::getenv(kWorkspaceEnv); env != nullptr && *env != '\0') {
    global.workspace = env;
  }
  if (seed_opt->count() > 0) global.seed = seed;
  global.timestamp = !no_timestamp;
  if (bootstrap_opt->count() > 0) learn.bootstrap = bootstrap;
  if (alpha_opt->count() > 0) fit.alpha = alpha;

  try {
    if (prep_cmd->parsed()) return cmd_prep(global, prep, out);
    if (learn_cmd->parsed()) return cmd_learn(global, learn, out);
    if (fit_cmd->parsed()) return cmd_fit(global, fit, out);
    for (const auto& [name, cmd] : model_cmds) {
      if (!cmd->parsed()) continue;
      if (name == "query") return cmd_query(global, model, out);
      if (name == "sobol") return cmd_sobol(global, model, out);
      if (name == "scenario") return cmd_scenario(global, model, out);
      if (name == "sensitivity") return cmd_sensitivity(global, model, out);
      return cmd_export(global, model, out);
    }
  } catch (const UsageError& e) {
    err << "beliefnet: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "beliefnet: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "beliefnet: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace beliefnet::cli
