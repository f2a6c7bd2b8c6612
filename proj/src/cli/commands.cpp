#include "beliefnet/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <set>

#include "beliefnet/analysis/scenario.hpp"
#include "beliefnet/analysis/sensitivity.hpp"
#include "beliefnet/analysis/sobol.hpp"
#include "beliefnet/core/error.hpp"
#include "beliefnet/core/model_io.hpp"
#include "beliefnet/data/config.hpp"
#include "beliefnet/data/csv.hpp"
#include "beliefnet/data/pipeline.hpp"
#include "beliefnet/infer/fit.hpp"
#include "beliefnet/learn/averaging.hpp"
#include "beliefnet/learn/bootstrap.hpp"
#include "beliefnet/learn/constraints.hpp"
#include "beliefnet/learn/tabu.hpp"
#include "beliefnet/report/manifest.hpp"
#include "beliefnet/report/svg.hpp"
#include "beliefnet/report/tables.hpp"
#include "beliefnet/report/workspace.hpp"
#include "beliefnet/util/format.hpp"
#include "beliefnet/util/parallel.hpp"
#include "beliefnet/util/random.hpp"

namespace beliefnet::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

/// One artifact-producing command: workspace lock, queued outputs, manifest.
class Run {
 public:
  Run(const GlobalOptions& global, std::string command, std::ostream& out)
      : ws_(global.workspace, global.force), out_(out), start_(std::chrono::steady_clock::now()) {
    manifest_.command = std::move(command);
    manifest_.version = BELIEFNET_VERSION;
    manifest_.started = report::utc_timestamp();
    manifest_.seed_from_entropy = !global.seed.has_value();
    manifest_.seed = global.seed ? *global.seed : entropy_seed();
    manifest_.config["workers"] = global.workers;
    manifest_.config["force"] = global.force;
    manifest_.config["timestamp"] = global.timestamp;
  }

  const report::Workspace& workspace() const { return ws_; }
  report::RunManifest& manifest() { return manifest_; }
  std::uint64_t seed() const { return manifest_.seed; }

  // Reads an input file and records its fingerprint.
  std::string read(const fs::path& path) {
    std::string bytes = csv::read_file(path);
    manifest_.inputs[display(path)] = fnv1a_hex(bytes);
    return bytes;
  }

  void queue(fs::path relative, std::string content) {
    ws_.resolve(relative);
    pending_.emplace_back(std::move(relative), std::move(content));
  }

  // Writes queued outputs after checking that none would be overwritten
  // without --force.
  void flush() {
    for (const auto& [path, content] : pending_) ws_.check_writable(path);
    for (auto& [path, content] : pending_) {
      ws_.write(path, content);
      manifest_.outputs.push_back(path.generic_string());
      out_ << "wrote " << path.generic_string() << "\n";
    }
    pending_.clear();
  }

  void finish(const fs::path& manifest_path) {
    flush();
    manifest_.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    ws_.write(manifest_path, manifest_.to_json().dump(2) + "\n");
    out_ << "wrote " << manifest_path.generic_string() << "\n";
  }

 private:
  std::string display(const fs::path& path) const {
    const auto rel = fs::weakly_canonical(path).lexically_relative(ws_.root());
    if (!rel.empty() && *rel.begin() != "..") return rel.generic_string();
    return fs::weakly_canonical(path).generic_string();
  }

  report::Workspace ws_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point start_;
  report::RunManifest manifest_;
  std::vector<std::pair<fs::path, std::string>> pending_;
};

// ---- request config helpers ----------------------------------------------

[[noreturn]] void bad_config(const std::string& source, const std::string& where,
                             const std::string& what) {
  throw Error(ErrorKind::Config, source + ": " + where + ": " + what);
}

struct ConfigDoc {
  json doc;
  std::string source;
};

ConfigDoc load_config(Run& run, const GlobalOptions& global, bool required) {
  if (global.config.empty()) {
    if (required) throw UsageError("this command needs --config");
    return {json::object(), "(defaults)"};
  }
  const fs::path path = run.workspace().locate_input(global.config);
  ConfigDoc c{config::parse(run.read(path), path.string()), path.string()};
  if (!c.doc.is_object()) bad_config(c.source, "/", "expected an object");
  run.manifest().config["file"] = c.doc;
  return c;
}

std::vector<std::string> string_list(const json& j, const std::string& source,
                                     const std::string& where) {
  if (!j.is_array()) bad_config(source, where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) bad_config(source, where + "/" + std::to_string(i), "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

std::vector<std::string> optional_list(const json& obj, const char* key,
                                       const std::string& source, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) return {};
  return string_list(*it, source, where + "/" + key);
}

const json& member(const json& obj, const char* key, const std::string& source,
                   const std::string& where) {
  if (!obj.is_object()) bad_config(source, where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad_config(source, where, std::string("missing key '") + key + "'");
  return *it;
}

std::string string_member(const json& obj, const char* key, const std::string& source,
                          const std::string& where) {
  const json& j = member(obj, key, source, where);
  if (!j.is_string()) bad_config(source, where + "/" + key, "expected a string");
  return j.get<std::string>();
}

double number_or(const json& obj, const char* key, double fallback, const std::string& source,
                 const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number()) bad_config(source, where + "/" + key, "expected a number");
  return it->get<double>();
}

int int_or(const json& obj, const char* key, int fallback, const std::string& source,
           const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number_integer()) bad_config(source, where + "/" + key, "expected an integer");
  return it->get<int>();
}

Evidence evidence_from(const json& obj, const std::string& source, const std::string& where) {
  Evidence e;
  if (obj.is_null()) return e;
  if (!obj.is_object()) bad_config(source, where, "expected an object of variable: level");
  for (const auto& [name, level] : obj.items()) {
    if (!level.is_string()) bad_config(source, where + "/" + name, "expected a level label");
    e.set(name, level.get<std::string>());
  }
  return e;
}

std::set<NamedArc> arc_list(const json& obj, const char* key, const std::string& source) {
  std::set<NamedArc> arcs;
  auto it = obj.find(key);
  if (it == obj.end()) return arcs;
  const std::string where = std::string("/") + key;
  if (!it->is_array()) bad_config(source, where, "expected an array of [from, to] pairs");
  for (std::size_t i = 0; i < it->size(); ++i) {
    const auto pair = string_list((*it)[i], source, where + "/" + std::to_string(i));
    if (pair.size() != 2) bad_config(source, where + "/" + std::to_string(i), "expected [from, to]");
    arcs.insert({pair[0], pair[1]});
  }
  return arcs;
}

// ---- inputs ---------------------------------------------------------------

bool has_extension(const std::string& arg, const char* ext) {
  return fs::path(arg).extension() == ext;
}

struct LoadedTable {
  DataTable table;
  std::string stem;
};

LoadedTable load_table(Run& run, const std::string& arg) {
  if (arg.empty()) throw UsageError("missing --data");
  const fs::path csv_path = has_extension(arg, ".csv")
                                ? run.workspace().locate_input(arg)
                                : run.workspace().root() / "data" / (arg + ".csv");
  const fs::path dict_path =
      csv_path.parent_path() / (csv_path.stem().string() + ".dictionary.json");
  const auto dictionary = parse_data_dictionary(run.read(dict_path));
  return {parse_data_table(run.read(csv_path), dictionary), csv_path.stem().string()};
}

struct LoadedModel {
  FittedNetwork net;
  std::string stem;
};

LoadedModel load_model_arg(Run& run, const std::string& arg) {
  if (arg.empty()) throw UsageError("missing --model");
  const fs::path path = has_extension(arg, ".json")
                            ? run.workspace().locate_input(arg)
                            : run.workspace().root() / "models" / (arg + ".json");
  return {deserialize(run.read(path)), path.stem().string()};
}

report::SvgOptions svg_options(const GlobalOptions& global) {
  report::SvgOptions o;
  if (global.timestamp) o.timestamp = report::utc_timestamp();
  return o;
}

fs::path report_path(const std::string& stem, const std::string& suffix) {
  return fs::path("reports") / report::safe_name(stem + "_" + suffix);
}

// ---- prep -----------------------------------------------------------------

struct AuditRow {
  std::string stage;
  std::string table;
  std::size_t rows = 0;
  std::string detail;
};

std::string audit_csv(const std::vector<AuditRow>& rows) {
  std::string out = "stage,table,rows,detail\n";
  for (const auto& r : rows) {
    out += csv::join({r.stage, r.table, std::to_string(r.rows), r.detail}) + "\n";
  }
  return out;
}

// Collapses rare levels of every eligible variable, recording what changed.
DataTable collapse_all(DataTable table, const RecodeSpec& spec,
                       const std::set<std::string>& exempt, std::vector<AuditRow>& audit) {
  for (const auto& v : spec.variables) {
    if (!v.collapse_rare || exempt.contains(v.name)) continue;
    const int c = table.index_of(v.name);
    const Variable before = table.variable(c);
    const std::vector<int> old(table.column(c).begin(), table.column(c).end());
    table = collapse_rare(table, v.name, spec.min_count);
    const Variable& after = table.variable(c);
    if (after.cardinality() == before.cardinality()) continue;
    std::string dropped;
    for (const auto& level : before.levels()) {
      if (!after.find_level(level)) dropped += (dropped.empty() ? "" : "; ") + level;
    }
    std::size_t cells = 0;
    for (std::size_t r = 0; r < old.size(); ++r) {
      if (old[r] != kMissing && table.is_missing(r, c)) ++cells;
    }
    audit.push_back({"collapse_rare", v.name, cells, "levels set missing: " + dropped});
  }
  return table;
}

}  // namespace

int cmd_prep(const GlobalOptions& global, const PrepOptions& options, std::ostream& out) {
  static const std::set<std::string> kPopulations{"all", "full", "risk", "opportunity"};
  if (!kPopulations.contains(options.population)) {
    throw UsageError("--population must be all, full, risk or opportunity");
  }
  if (options.input.empty()) throw UsageError("missing --input");
  Run run(global, "prep", out);
  const ConfigDoc cfg = load_config(run, global, true);
  const RecodeSpec spec = config::recode_spec(cfg.doc, cfg.source);
  const std::vector<ThemeSpec> themes =
      cfg.doc.contains("themes") ? config::theme_specs(cfg.doc, cfg.source) : std::vector<ThemeSpec>{};
  const FramingLevels framing = config::framing_levels(cfg.doc, cfg.source);
  run.manifest().config["population"] = options.population;

  const fs::path input = run.workspace().locate_input(options.input);
  const RawTable raw = parse_raw_table(run.read(input), spec.raw_columns());
  std::vector<AuditRow> audit{{"input", "raw", raw.rows.size(), raw.fingerprint.hash}};

  DataTable table = recode(raw, spec);
  audit.push_back({"recode", "full", table.rows(), std::to_string(table.cols()) + " variables"});

  std::set<std::string> members;
  for (const auto& t : themes) members.insert(t.members.begin(), t.members.end());
  if (table.rows() > 0) table = collapse_all(std::move(table), spec, members, audit);

  if (!themes.empty()) {
    table = group_themes(table, themes);
    audit.push_back({"group_themes", "full", table.rows(), std::to_string(themes.size()) + " themes"});
  }

  // Theme columns only make sense within their own population.
  auto scoped = [&](const std::string& keep) {
    std::vector<std::string> drop;
    for (const auto& t : themes) {
      if (!t.population.empty() && t.population != keep) drop.push_back(t.name);
    }
    return drop;
  };
  auto population_drop = [&](const std::string& name) {
    auto it = cfg.doc.find("populations");
    if (it == cfg.doc.end()) return std::vector<std::string>{};
    auto pop = it->find(name);
    if (pop == it->end()) return std::vector<std::string>{};
    return optional_list(*pop, "drop", cfg.source, "/populations/" + name);
  };

  std::vector<std::pair<std::string, DataTable>> outputs;
  const bool want_all = options.population == "all";
  if (want_all || options.population == "full") {
    auto drop = scoped("");
    auto extra = population_drop("full");
    drop.insert(drop.end(), extra.begin(), extra.end());
    outputs.emplace_back("full", table.drop_columns(drop));
  }
  if (want_all || options.population == "risk" || options.population == "opportunity") {
    if (!table.find(framing.variable)) {
      throw Error(ErrorKind::MissingColumn,
                  "framing variable '" + framing.variable + "' is needed to split the sample");
    }
    auto [risk, opportunity] = split_population(table, framing);
    for (auto& [name, part] : {std::pair{std::string("risk"), std::move(risk)},
                               std::pair{std::string("opportunity"), std::move(opportunity)}}) {
      if (!want_all && options.population != name) continue;
      audit.push_back({"split_population", name, part.rows(), ""});
      auto drop = scoped(name);
      drop.push_back(framing.variable);
      auto extra = population_drop(name);
      drop.insert(drop.end(), extra.begin(), extra.end());
      outputs.emplace_back(name, part.drop_columns(drop));
    }
  }

  for (auto& [name, part] : outputs) {
    std::vector<std::string> names;
    for (const auto& v : part.variables()) names.push_back(v.name());
    part = drop_incomplete(part, names);
    audit.push_back({"drop_incomplete", name, part.rows(), std::to_string(part.cols()) + " variables"});
    run.queue(fs::path("data") / (name + ".csv"), data_table_csv(part));
    run.queue(fs::path("data") / (name + ".dictionary.json"), data_dictionary_json(part.variables()));
  }
  run.queue("data/prep_audit.csv", audit_csv(audit));
  run.finish("reports/prep.manifest.json");
  return 0;
}

int cmd_learn(const GlobalOptions& global, const LearnOptions& options, std::ostream& out) {
  Run run(global, "learn", out);
  const ConfigDoc cfg = load_config(run, global, false);
  const auto [data, data_stem] = load_table(run, options.data);
  const std::string name = options.name.empty() ? data_stem : options.name;

  std::vector<std::string> nodes;
  for (const auto& v : data.variables()) nodes.push_back(v.name());

  Constraints constraints;
  if (cfg.doc.contains("tiers")) {
    constraints = tiers_to_blacklist(config::tier_spec(cfg.doc, cfg.source), data.variables());
  }
  for (const auto& arc : arc_list(cfg.doc, "blacklist", cfg.source)) constraints.blacklist.insert(arc);
  constraints.whitelist = arc_list(cfg.doc, "whitelist", cfg.source);
  check_constraints(constraints, nodes);

  const std::string score_text = cfg.doc.value("score", std::string("aic"));
  const ScoreKind score = parse_score_kind(score_text);
  const double alpha = number_or(cfg.doc, "alpha", 1.0, cfg.source, "");
  const int replicates = options.bootstrap
                             ? *options.bootstrap
                             : int_or(cfg.doc, "bootstrap", 2000, cfg.source, "");
  if (replicates < 0) throw UsageError("--bootstrap must be >= 0");

  TabuConfig tabu;
  if (auto it = cfg.doc.find("tabu"); it != cfg.doc.end()) {
    tabu.tenure = int_or(*it, "tenure", tabu.tenure, cfg.source, "/tabu");
    tabu.max_iterations = int_or(*it, "max_iterations", tabu.max_iterations, cfg.source, "/tabu");
    tabu.stall_limit = int_or(*it, "stall_limit", tabu.stall_limit, cfg.source, "/tabu");
    tabu.restarts = int_or(*it, "restarts", tabu.restarts, cfg.source, "/tabu");
    tabu.perturbation = int_or(*it, "perturbation", tabu.perturbation, cfg.source, "/tabu");
  }
  validate(tabu);
  const int workers = resolve_workers(global.workers);

  Metadata meta{{"data", data_stem},
                {"rows", std::to_string(data.rows())},
                {"score", to_string(score)},
                {"alpha", format_number(alpha)},
                {"bootstrap", std::to_string(replicates)},
                {"seed", std::to_string(run.seed())}};
  std::string summary = "Model: " + name + "\nData: " + data_stem + " (" +
                        std::to_string(data.rows()) + " rows)\nScore: " + to_string(score) +
                        "\nSeed: " + std::to_string(run.seed()) + "\n";

  Dag dag(nodes);
  if (replicates == 0) {
    tabu.seed = run.seed();
    const TabuResult result = tabu_search(data, score, constraints, tabu);
    dag = result.dag;
    meta["score_value"] = format_number(result.score);
    summary += "Single tabu search, score " + format_number(result.score) + "\n";
  } else {
    BootstrapConfig bc{replicates, score, tabu, run.seed(), workers};
    const ArcStrengthTable strengths = bootstrap_strengths(data, constraints, bc);
    const double threshold = cfg.doc.contains("threshold")
                                 ? number_or(cfg.doc, "threshold", 0.5, cfg.source, "")
                                 : optimal_threshold(strengths);
    const AveragedNetwork avg = averaged_network(strengths, threshold, constraints);
    dag = avg.dag;
    meta["threshold"] = format_number(threshold);
    run.queue(fs::path("strengths") / report::safe_name(name + ".csv"), strengths_csv(strengths));
    summary += "Bootstrap replicates: " + std::to_string(replicates) +
               "\nThreshold: " + format_number(threshold) + "\n";
    for (const auto& s : avg.skipped) {
      summary += "Skipped " + s.from + " -> " + s.to + " (strength " + format_number(s.strength) +
                 ", " + s.reason + ")\n";
    }
  }
  summary += "Arcs: " + std::to_string(dag.arc_count()) + "\n";
  for (const auto& a : dag.arcs()) summary += "  " + dag.name(a.from) + " -> " + dag.name(a.to) + "\n";

  const FittedNetwork net = fit_bayes(dag, data, alpha, meta);
  run.manifest().config["bootstrap"] = replicates;
  run.manifest().config["score"] = to_string(score);
  run.queue(fs::path("models") / report::safe_name(name + ".json"), serialize(net));
  run.queue(fs::path("models") / report::safe_name(name + ".dot"), export_dot(net.dag()));
  run.queue(report_path(name, "learn.txt"), summary);
  run.finish(report_path(name, "learn.manifest.json"));
  return 0;
}

int cmd_fit(const GlobalOptions& global, const FitOptions& options, std::ostream& out) {
  Run run(global, "fit", out);
  const ConfigDoc cfg = load_config(run, global, false);
  const auto [model, model_stem] = load_model_arg(run, options.model);
  const auto [data, data_stem] = load_table(run, options.data);
  const std::string name = options.name.empty() ? data_stem : options.name;
  const double alpha =
      options.alpha ? *options.alpha : number_or(cfg.doc, "alpha", 1.0, cfg.source, "");
  Metadata meta{{"data", data_stem},
                {"rows", std::to_string(data.rows())},
                {"structure", model_stem}};
  if (options.mle) {
    meta["estimator"] = "mle";
  } else {
    meta["estimator"] = "bayes";
    meta["alpha"] = format_number(alpha);
  }
  const FittedNetwork net = options.mle ? fit_mle(model.dag(), data, meta)
                                        : fit_bayes(model.dag(), data, alpha, meta);
  run.queue(fs::path("models") / report::safe_name(name + ".json"), serialize(net));
  run.finish(report_path(name, "fit.manifest.json"));
  return 0;
}

int cmd_query(const GlobalOptions& global, const ModelOptions& options, std::ostream& out) {
  Run run(global, "query", out);
  const ConfigDoc cfg = load_config(run, global, true);
  const auto [net, stem] = load_model_arg(run, options.model);
  const json& queries = member(cfg.doc, "queries", cfg.source, "/");
  if (!queries.is_array()) bad_config(cfg.source, "/queries", "expected an array");
  std::string text;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    const std::string where = "/queries/" + std::to_string(i);
    const std::string target = string_member(queries[i], "target", cfg.source, where);
    const auto sweeps = optional_list(queries[i], "evidence", cfg.source, where);
    std::vector<QueryResult> results{posterior(net, target)};
    for (const auto& sweep : sweeps) {
      auto rows = conditional_table(net, target, sweep);
      results.insert(results.end(), std::make_move_iterator(rows.begin() + 1),
                     std::make_move_iterator(rows.end()));
    }
    const auto table = report::query_table(results);
    run.queue(report_path(stem, "query_" + target + ".csv"), report::query_csv(table));
    text += report::query_text(table) + "\n";
  }
  run.queue(report_path(stem, "query.txt"), text);
  run.finish(report_path(stem, "query.manifest.json"));
  return 0;
}

int cmd_sobol(const GlobalOptions& global, const ModelOptions& options, std::ostream& out) {
  Run run(global, "sobol", out);
  const ConfigDoc cfg = load_config(run, global, true);
  const auto [net, stem] = load_model_arg(run, options.model);
  const auto targets = string_list(member(cfg.doc, "targets", cfg.source, "/"), cfg.source, "/targets");
  const auto inputs = optional_list(cfg.doc, "inputs", cfg.source, "");
  const SobolMatrix matrix = sobol_matrix(net, targets, inputs, resolve_workers(global.workers));
  run.queue(report_path(stem, "sobol.csv"), report::sobol_csv(matrix));
  run.queue(report_path(stem, "sobol.txt"), report::sobol_text(matrix));
  run.finish(report_path(stem, "sobol.manifest.json"));
  return 0;
}

int cmd_scenario(const GlobalOptions& global, const ModelOptions& options, std::ostream& out) {
  Run run(global, "scenario", out);
  const ConfigDoc cfg = load_config(run, global, true);
  const auto [net, stem] = load_model_arg(run, options.model);
  const auto targets = string_list(member(cfg.doc, "targets", cfg.source, "/"), cfg.source, "/targets");
  const json& defs = member(cfg.doc, "scenarios", cfg.source, "/");
  if (!defs.is_array()) bad_config(cfg.source, "/scenarios", "expected an array");
  std::vector<ScenarioDef> scenarios;
  for (std::size_t i = 0; i < defs.size(); ++i) {
    const std::string where = "/scenarios/" + std::to_string(i);
    ScenarioDef s;
    s.name = string_member(defs[i], "name", cfg.source, where);
    if (auto it = defs[i].find("evidence"); it != defs[i].end()) {
      s.evidence = evidence_from(*it, cfg.source, where + "/evidence");
    }
    scenarios.push_back(std::move(s));
  }
  const auto rows = scenario_posteriors(net, scenarios, targets, resolve_workers(global.workers));
  std::string text;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    run.queue(report_path(stem, "scenario_" + targets[t] + ".csv"), report::scenario_csv(rows, t));
    text += report::scenario_text(rows, t) + "\n";
  }
  run.queue(report_path(stem, "scenario.txt"), text);
  // CSVs go to disk before any chart is rendered.
  run.flush();
  const auto svg = svg_options(global);
  for (std::size_t t = 0; t < targets.size(); ++t) {
    run.queue(report_path(stem, "scenario_" + targets[t] + ".svg"), report::scenario_svg(rows, t, svg));
  }
  run.finish(report_path(stem, "scenario.manifest.json"));
  return 0;
}

int cmd_sensitivity(const GlobalOptions& global, const ModelOptions& options,
                    std::ostream& out) {
  Run run(global, "sensitivity", out);
  const ConfigDoc cfg = load_config(run, global, true);
  const auto [net, stem] = load_model_arg(run, options.model);
  const json& events = member(cfg.doc, "events", cfg.source, "/");
  if (!events.is_array()) bad_config(cfg.source, "/events", "expected an array");
  const int workers = resolve_workers(global.workers);

  struct Chart {
    fs::path path;
    std::vector<TornadoBar> bars;
    TargetEvent event;
    double delta;
  };
  std::vector<Chart> charts;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const std::string where = "/events/" + std::to_string(i);
    TargetEvent event;
    event.variable = string_member(events[i], "target", cfg.source, where);
    event.state = string_member(events[i], "state", cfg.source, where);
    if (auto it = events[i].find("evidence"); it != events[i].end()) {
      event.evidence = evidence_from(*it, cfg.source, where + "/evidence");
    }
    TornadoOptions topt;
    topt.delta = number_or(events[i], "delta", 0.1, cfg.source, where);
    topt.nodes = optional_list(events[i], "nodes", cfg.source, where);
    topt.workers = workers;
    const auto bars = tornado(net, event, topt);
    const auto influence = node_influence(net, event, workers);
    const std::string tag = event.variable + "_" + event.state;
    const bool fd = !event.evidence.empty();
    run.queue(report_path(stem, "tornado_" + tag + ".csv"), report::tornado_csv(bars));
    run.queue(report_path(stem, "tornado_" + tag + ".txt"),
              report::tornado_text(bars, event, topt.delta, fd));
    run.queue(report_path(stem, "influence_" + tag + ".csv"), report::influence_csv(influence));
    run.queue(report_path(stem, "influence_" + tag + ".dot"),
              export_dot(net.dag(), influence_colors(influence)));
    charts.push_back({report_path(stem, "tornado_" + tag + ".svg"), bars, event, topt.delta});
  }
  run.flush();
  const auto svg = svg_options(global);
  for (const auto& c : charts) {
    run.queue(c.path, report::tornado_svg(c.bars, c.event, c.delta, svg));
  }
  run.finish(report_path(stem, "sensitivity.manifest.json"));
  return 0;
}

int cmd_export(const GlobalOptions& global, const ModelOptions& options, std::ostream& out) {
  Run run(global, "export", out);
  const auto [net, stem] = load_model_arg(run, options.model);
  run.queue(report_path(stem, "graph.dot"), export_dot(net.dag()));
  run.finish(report_path(stem, "export.manifest.json"));
  return 0;
}

}  // namespace beliefnet::cli
