#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "beliefnet/analysis/scenario.hpp"
#include "beliefnet/cli/app.hpp"
#include "beliefnet/core/model_io.hpp"
#include "beliefnet/data/config.hpp"
#include "beliefnet/data/csv.hpp"
#include "beliefnet/data/data_table.hpp"
#include "beliefnet/report/manifest.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace beliefnet;
namespace fs = std::filesystem;

namespace {

const fs::path kSource = BELIEFNET_SOURCE_DIR;
const fs::path kSurvey = kSource / "data/fixture/survey.csv";
const fs::path kConfigs = kSource / "configs/fixture";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream(p, std::ios::binary) << text;
}

// Runs prep on the fixture into a fresh workspace.
void prep(const fs::path& ws) {
  const auto r = run({"-w", ws.string(), "-c", (kConfigs / "prep.json").string(), "prep", "-i",
                      kSurvey.string()});
  REQUIRE_MESSAGE(r.code == 0, r.err);
}

// Expected table sizes recomputed from the raw file and the prep config with
// plain loops: token -> label lookup, level tallies, the any-mentioned rule
// and row filters.
struct ExpectedCounts {
  std::size_t full = 0, risk = 0, opportunity = 0;
  std::size_t risk_split = 0, opportunity_split = 0;
};

ExpectedCounts brute_force_counts() {
  const auto cfg = config::load(kConfigs / "prep.json");
  const auto rows = csv::parse(slurp(kSurvey));
  std::map<std::string, int> col;
  for (std::size_t c = 0; c < rows[0].size(); ++c) col[rows[0][c]] = static_cast<int>(c);
  const int min_count = cfg["min_count"].get<int>();

  std::set<std::string> members;
  for (const auto& t : cfg["themes"]) {
    for (const auto& m : t["members"]) members.insert(m.get<std::string>());
  }
  // label[v][r]: recoded label or "" for missing
  std::map<std::string, std::vector<std::string>> label;
  for (const auto& v : cfg["variables"]) {
    const std::string name = v["name"];
    const std::string column = v.value("column", name);
    std::vector<std::string> missing;
    for (const auto& m : v.value("missing", nlohmann::json::array())) {
      missing.push_back(m.is_string() ? m.get<std::string>() : m.dump());
    }
    auto& out = label[name];
    for (std::size_t r = 1; r < rows.size(); ++r) {
      const std::string& tok = rows[r][col.at(column)];
      std::string l;
      if (v.contains("map") && v["map"].contains(tok)) {
        l = v["map"][tok].is_null() ? "" : v["map"][tok].get<std::string>();
      } else if (std::find(missing.begin(), missing.end(), tok) != missing.end()) {
        l = "";
      } else {
        l = tok;
      }
      out.push_back(l);
    }
    if (!members.contains(name)) {
      std::map<std::string, int> tally;
      for (const auto& l : out) {
        if (!l.empty()) ++tally[l];
      }
      for (auto& l : out) {
        if (!l.empty() && tally[l] < min_count) l.clear();
      }
    }
  }
  std::map<std::string, std::vector<std::string>> theme;
  std::map<std::string, std::string> population;
  for (const auto& t : cfg["themes"]) {
    const std::string name = t["name"];
    population[name] = t.value("population", "");
    auto& out = theme[name];
    for (std::size_t r = 0; r + 1 < rows.size(); ++r) {
      bool any = false, all_observed = true;
      for (const auto& m : t["members"]) {
        const auto& l = label[m.get<std::string>()][r];
        any |= l == "Mentioned";
        all_observed &= !l.empty();
      }
      out.push_back(any ? "Mentioned" : all_observed ? "Not mentioned" : "");
    }
  }
  std::set<std::string> perception;
  for (const auto& d : cfg["populations"]["risk"]["drop"]) perception.insert(d.get<std::string>());

  ExpectedCounts e;
  for (std::size_t r = 0; r + 1 < rows.size(); ++r) {
    auto complete = [&](const std::string& pop) {
      for (const auto& [name, values] : label) {
        if (members.contains(name)) continue;
        if (pop != "full" && (perception.contains(name) || name == "DevelopAI")) continue;
        if (values[r].empty()) return false;
      }
      for (const auto& [name, values] : theme) {
        const auto& p = population[name];
        if (!p.empty() && p != pop) continue;
        if (values[r].empty()) return false;
      }
      return true;
    };
    const auto& frame = label["DevelopAI"][r];
    const bool in_risk = frame == "Risk" || frame == "Both";
    const bool in_opp = frame == "Opportunity" || frame == "Both";
    e.risk_split += in_risk;
    e.opportunity_split += in_opp;
    e.full += complete("full");
    e.risk += in_risk && complete("risk");
    e.opportunity += in_opp && complete("opportunity");
  }
  return e;
}

}  // namespace

TEST_CASE("usage errors exit with 1") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"--bogus"}).code == cli::kExitUsage);
  CHECK(run({"learn"}).code == cli::kExitUsage);
  CHECK(run({"--workers", "-2", "export", "-m", "x"}).code == cli::kExitUsage);
  CHECK(run({"prep", "-i", "x.csv", "--population", "teens"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
  const auto v = run({"--version"});
  CHECK(v.code == cli::kExitOk);
  bntest::TempDir dir("cli");
  // prep requires a config file
  CHECK(run({"-w", dir.path().string(), "prep", "-i", kSurvey.string()}).code == cli::kExitUsage);
}

TEST_CASE("data and model errors exit with 2") {
  bntest::TempDir dir("cli");
  const auto r = run({"-w", dir.path().string(), "export", "-m", "missing"});
  CHECK(r.code == cli::kExitFailure);
  CHECK(r.err.find("missing") != std::string::npos);
  write(dir.path() / "bad.json", "{ \"variables\": [ }");
  const auto c = run({"-w", dir.path().string(), "-c", (dir.path() / "bad.json").string(), "prep",
                      "-i", kSurvey.string()});
  CHECK(c.code == cli::kExitFailure);
  CHECK(c.err.find("bad.json:1:") != std::string::npos);
}

TEST_CASE("prep on the fixture matches a brute-force recount") {
  bntest::TempDir dir("prep");
  prep(dir.path());
  const auto e = brute_force_counts();
  const auto audit = csv::parse(slurp(dir.path() / "data/prep_audit.csv"));
  std::map<std::pair<std::string, std::string>, std::size_t> rows;
  for (std::size_t i = 1; i < audit.size(); ++i) rows[{audit[i][0], audit[i][1]}] = std::stoul(audit[i][2]);
  CHECK(rows.at({"input", "raw"}) == 1506);
  CHECK(rows.at({"split_population", "risk"}) == e.risk_split);
  CHECK(rows.at({"split_population", "opportunity"}) == e.opportunity_split);
  CHECK(rows.at({"drop_incomplete", "full"}) == e.full);
  CHECK(rows.at({"drop_incomplete", "risk"}) == e.risk);
  CHECK(rows.at({"drop_incomplete", "opportunity"}) == e.opportunity);
  for (const char* t : {"full", "risk", "opportunity"}) {
    const auto table = load_data_table(dir.path() / "data" / (std::string(t) + ".csv"),
                                       dir.path() / "data" / (std::string(t) + ".dictionary.json"));
    CHECK(table.complete_rows() == table.rows());
    CHECK(table.rows() == rows.at({"drop_incomplete", t}));
  }
  const auto risk = load_data_table(dir.path() / "data/risk.csv", dir.path() / "data/risk.dictionary.json");
  CHECK(risk.find("RiskJobs").has_value());
  CHECK_FALSE(risk.find("PosWork").has_value());
  CHECK_FALSE(risk.find("DevelopAI").has_value());
  CHECK_FALSE(risk.find("AIUncontrollable").has_value());
  CHECK(fs::exists(dir.path() / "reports/prep.manifest.json"));
}

TEST_CASE("prep edge cases") {
  bntest::TempDir dir("prep");
  const auto header = csv::parse(slurp(kSurvey))[0];
  write(dir.path() / "empty.csv", csv::join(header) + "\n");
  auto r = run({"-w", (dir.path() / "ws").string(), "-c", (kConfigs / "prep.json").string(), "prep",
                "-i", (dir.path() / "empty.csv").string()});
  REQUIRE_MESSAGE(r.code == 0, r.err);
  const auto audit = csv::parse(slurp(dir.path() / "ws/data/prep_audit.csv"));
  for (std::size_t i = 1; i < audit.size(); ++i) CHECK(audit[i][2] == "0");

  auto cfg = config::load(kConfigs / "prep.json");
  cfg["themes"][0]["members"][0] = "opp_99";
  write(dir.path() / "bad_theme.json", cfg.dump());
  r = run({"-w", (dir.path() / "ws2").string(), "-c", (dir.path() / "bad_theme.json").string(),
           "prep", "-i", kSurvey.string()});
  CHECK(r.code == cli::kExitFailure);
  CHECK(r.err.find("opp_99") != std::string::npos);
}

TEST_CASE("learn is reproducible and honours the bootstrap flag") {
  bntest::TempDir dir("learn");
  const auto ws = dir.path().string();
  prep(dir.path());
  const auto learn_cfg = (kConfigs / "learn_risk.json").string();
  auto r = run({"-w", ws, "--seed", "11", "-c", learn_cfg, "learn", "-d", "risk", "-B", "6", "--name", "a"});
  REQUIRE_MESSAGE(r.code == 0, r.err);
  r = run({"-w", ws, "--seed", "11", "--workers", "3", "-c", learn_cfg, "learn", "-d", "risk", "-B", "6",
           "--name", "b"});
  REQUIRE_MESSAGE(r.code == 0, r.err);
  CHECK(slurp(dir.path() / "models/a.json") == slurp(dir.path() / "models/b.json"));
  CHECK(slurp(dir.path() / "strengths/a.csv") == slurp(dir.path() / "strengths/b.csv"));

  // Overwriting needs --force.
  r = run({"-w", ws, "--seed", "11", "-c", learn_cfg, "learn", "-d", "risk", "-B", "6", "--name", "a"});
  CHECK(r.code == cli::kExitFailure);
  r = run({"-w", ws, "--seed", "11", "--force", "-c", learn_cfg, "learn", "-d", "risk", "-B", "6",
           "--name", "a"});
  CHECK(r.code == 0);
  CHECK(slurp(dir.path() / "models/a.json") == slurp(dir.path() / "models/b.json"));

  r = run({"-w", ws, "--seed", "11", "-c", learn_cfg, "learn", "-d", "risk", "-B", "0", "--name", "single"});
  REQUIRE_MESSAGE(r.code == 0, r.err);
  const auto single = load_model(dir.path() / "models/single.json");
  CHECK(single.metadata().at("bootstrap") == "0");
  CHECK_FALSE(fs::exists(dir.path() / "strengths/single.csv"));

  const auto manifest = report::RunManifest::from_json(
      nlohmann::ordered_json::parse(slurp(dir.path() / "reports/a_learn.manifest.json")));
  CHECK(manifest.command == "learn");
  CHECK(manifest.seed == 11);
  CHECK_FALSE(manifest.seed_from_entropy);
  CHECK(manifest.inputs.size() >= 2);

  r = run({"-w", ws, "-c", learn_cfg, "learn", "-d", "risk", "-B", "0", "--name", "entropy"});
  REQUIRE(r.code == 0);
  const auto em = report::RunManifest::from_json(
      nlohmann::ordered_json::parse(slurp(dir.path() / "reports/entropy_learn.manifest.json")));
  CHECK(em.seed_from_entropy);
}

TEST_CASE("whitelisted arc against the tiers is rejected") {
  bntest::TempDir dir("learn");
  prep(dir.path());
  auto cfg = config::load(kConfigs / "learn_risk.json");
  cfg["whitelist"] = nlohmann::json::array({nlohmann::json::array({"RiskJobs", "Age"})});
  write(dir.path() / "wl.json", cfg.dump());
  const auto r = run({"-w", dir.path().string(), "--seed", "1", "-c", (dir.path() / "wl.json").string(),
                      "learn", "-d", "risk", "-B", "0"});
  CHECK(r.code == cli::kExitFailure);
  CHECK(r.err.find("UnsatisfiableConstraints") != std::string::npos);
}

TEST_CASE("analysis commands write their reports") {
  bntest::TempDir dir("analysis");
  const auto ws = dir.path().string();
  prep(dir.path());
  REQUIRE(run({"-w", ws, "--seed", "3", "-c", (kConfigs / "learn_full.json").string(), "learn", "-d",
               "full", "-B", "0"}).code == 0);
  auto go = [&](const char* cmd, const char* cfg, std::vector<std::string> extra = {}) {
    std::vector<std::string> args{"-w", ws, "--no-timestamp", "-c", (kConfigs / cfg).string()};
    args.insert(args.end(), extra.begin(), extra.end());
    args.insert(args.end(), {cmd, "-m", "full"});
    const auto r = run(args);
    REQUIRE_MESSAGE(r.code == 0, r.err);
  };
  go("query", "query.json");
  go("sobol", "sobol.json");
  go("scenario", "scenarios.json");
  go("sensitivity", "sensitivity.json");
  REQUIRE(run({"-w", ws, "export", "-m", "full"}).code == 0);

  const auto net = load_model(dir.path() / "models/full.json");
  const auto cfg = config::load(kConfigs / "scenarios.json");
  std::vector<ScenarioDef> defs;
  for (const auto& s : cfg["scenarios"]) {
    Evidence ev;
    const auto evidence = s.value("evidence", nlohmann::json::object());
    for (const auto& [k, v] : evidence.items()) ev.set(k, v.get<std::string>());
    defs.push_back({s["name"], ev});
  }
  const auto expected = scenario_posteriors(net, defs, {"DevelopAI"});
  const auto rows = csv::parse(slurp(dir.path() / "reports/full_scenario_DevelopAI.csv"));
  REQUIRE(rows.size() == defs.size() + 1);
  CHECK(defs.size() == 11);
  for (std::size_t s = 0; s < defs.size(); ++s) {
    CHECK(rows[s + 1][0] == defs[s].name);
    for (int k = 0; k < 3; ++k) {
      const double want = expected[s].posteriors[0].distribution[k];
      CHECK(std::abs(std::stod(rows[s + 1][3 + k]) - want) <= 1e-11 * want);
    }
  }
  for (const char* f : {"full_query_DevelopAI.csv", "full_query.txt", "full_sobol.csv", "full_sobol.txt",
                        "full_scenario_DevelopAI.svg", "full_tornado_HeardEURegulation_No.csv",
                        "full_tornado_HeardEURegulation_No.svg", "full_influence_HeardEURegulation_No.dot",
                        "full_graph.dot"}) {
    CHECK_MESSAGE(fs::exists(dir.path() / "reports" / f), f);
  }
  CHECK(slurp(dir.path() / "reports/full_scenario_DevelopAI.svg").find("<metadata>") == std::string::npos);
  std::size_t manifests = 0;
  for (const auto& entry : fs::directory_iterator(dir.path() / "reports")) {
    manifests += entry.path().filename().string().ends_with(".manifest.json");
  }
  // prep, learn, query, sobol, scenario, sensitivity, export
  CHECK(manifests == 7);
}

TEST_CASE("a failing chart never truncates the CSV written before it") {
  bntest::TempDir dir("svg");
  const auto ws = dir.path().string();
  fs::create_directories(dir.path() / "models");
  fs::copy_file(fs::path(BELIEFNET_TEST_DIR) / "golden/framing.json", dir.path() / "models/f.json");
  write(dir.path() / "s.json",
        R"({"targets": ["Framing"], "scenarios": [{"name": "Baseline"}, {"name": "Low", "evidence": {"Interest": "Low"}}]})");
  // A directory where the chart should go makes the SVG write fail.
  fs::create_directories(dir.path() / "reports/f_scenario_Framing.svg");
  const auto r = run({"-w", ws, "--force", "-c", (dir.path() / "s.json").string(), "scenario", "-m", "f"});
  CHECK(r.code == cli::kExitFailure);
  const auto rows = csv::parse(slurp(dir.path() / "reports/f_scenario_Framing.csv"));
  REQUIRE(rows.size() == 3);
  CHECK(rows[2][0] == "Low");
}

TEST_CASE("workspace comes from the environment and is locked") {
  bntest::TempDir dir("env");
  fs::create_directories(dir.path() / "models");
  fs::copy_file(fs::path(BELIEFNET_TEST_DIR) / "golden/sprinkler.json", dir.path() / "models/s.json");
  ::setenv(cli::kWorkspaceEnv, dir.path().c_str(), 1);
  auto r = run({"export", "-m", "s"});
  ::unsetenv(cli::kWorkspaceEnv);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  CHECK(fs::exists(dir.path() / "reports/s_graph.dot"));

  write(dir.path() / ".beliefnet.lock", "");
  r = run({"-w", dir.path().string(), "--force", "export", "-m", "s"});
  CHECK(r.code == cli::kExitFailure);
  CHECK(r.err.find("locked") != std::string::npos);
}
