#include <doctest.h>

#include <cmath>
#include <fstream>
#include <functional>
#include <regex>
#include <sstream>

#include "beliefnet/analysis/scenario.hpp"
#include "beliefnet/analysis/sensitivity.hpp"
#include "beliefnet/analysis/sobol.hpp"
#include "beliefnet/core/error.hpp"
#include "beliefnet/core/model_io.hpp"
#include "beliefnet/data/csv.hpp"
#include "beliefnet/infer/elimination.hpp"
#include "beliefnet/report/manifest.hpp"
#include "beliefnet/report/svg.hpp"
#include "beliefnet/report/tables.hpp"
#include "beliefnet/report/workspace.hpp"
#include "support.hpp"

using namespace beliefnet;
using namespace beliefnet::report;

namespace {

FittedNetwork golden(const std::string& name) {
  std::ifstream in(std::string(BELIEFNET_TEST_DIR) + "/golden/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  return deserialize(s.str());
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Io;
}

// Minimal well-formedness check: balanced tags, quoted attributes, escaped
// text. Returns an empty string when the document is fine.
std::string xml_problem(const std::string& doc) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  bool root_seen = false;
  while (i < doc.size()) {
    if (doc[i] != '<') {
      if (doc[i] == '&') {
        static const std::regex entity("&(amp|lt|gt|quot|apos|#[0-9]+);");
        std::smatch m;
        const std::string rest = doc.substr(i, 8);
        if (!std::regex_search(rest, m, entity) || m.position(0) != 0) return "bad entity at " + std::to_string(i);
      }
      if (stack.empty() && !std::isspace(static_cast<unsigned char>(doc[i]))) return "text outside root";
      ++i;
      continue;
    }
    const auto close = doc.find('>', i);
    if (close == std::string::npos) return "unterminated tag";
    std::string tag = doc.substr(i + 1, close - i - 1);
    i = close + 1;
    if (tag.rfind("?", 0) == 0 || tag.rfind("!--", 0) == 0) continue;
    if (tag.rfind("/", 0) == 0) {
      if (stack.empty() || stack.back() != tag.substr(1)) return "mismatched </" + tag.substr(1) + ">";
      stack.pop_back();
      continue;
    }
    const bool self_closing = !tag.empty() && tag.back() == '/';
    if (self_closing) tag.pop_back();
    const std::string name = tag.substr(0, tag.find_first_of(" \t\n"));
    const std::string attrs = tag.substr(name.size());
    static const std::regex attr_re("\\s+[A-Za-z_:][-A-Za-z0-9_:.]*=\"[^\"<]*\"");
    if (!std::regex_replace(attrs, attr_re, "").empty() &&
        std::regex_replace(attrs, attr_re, "").find_first_not_of(" \t\n") != std::string::npos) {
      return "bad attributes on <" + name + ">";
    }
    if (stack.empty()) {
      if (root_seen) return "second root";
      root_seen = true;
    }
    if (!self_closing) stack.push_back(name);
  }
  if (!stack.empty()) return "unclosed <" + stack.back() + ">";
  return root_seen ? "" : "no root";
}

bool external_reference(const std::string& svg) {
  std::string s = svg;
  const std::string ns = "xmlns=\"http://www.w3.org/2000/svg\"";
  if (auto p = s.find(ns); p != std::string::npos) s.erase(p, ns.size());
  return s.find("href") != std::string::npos || s.find("http") != std::string::npos ||
         s.find("url(") != std::string::npos || s.find("<image") != std::string::npos;
}

}  // namespace

TEST_CASE("query CSV round-trips the stored precision") {
  const auto net = golden("sprinkler.json");
  const auto table = query_table(conditional_table(net, "Rain", "WetGrass"));
  REQUIRE(table.rows.size() == 3);
  CHECK(table.rows[0].evidence_variable.empty());
  CHECK(table.rows[0].evidence_value == kBaseline);
  const auto text = query_csv(table);
  CHECK(text.rfind("evidence_variable,evidence_value,False,True\n,Baseline,", 0) == 0);
  const auto back = parse_query_csv(text, "Rain");
  REQUIRE(back.rows.size() == 3);
  CHECK(back.levels == table.levels);
  for (std::size_t r = 0; r < 3; ++r) {
    CHECK(back.rows[r].evidence_value == table.rows[r].evidence_value);
    for (int k = 0; k < 2; ++k) {
      const double a = back.rows[r].distribution[k], b = table.rows[r].distribution[k];
      CHECK(std::abs(a - b) <= 5e-12 * std::abs(b));
    }
  }
  CHECK(kind_of([] { parse_query_csv("", "Rain"); }) == ErrorKind::MalformedFile);
  CHECK(kind_of([] { parse_query_csv("evidence_variable,evidence_value,a\n,Baseline,x\n", "R"); }) ==
        ErrorKind::MalformedFile);
  CHECK(kind_of([&] {
          query_table({posterior(net, "Rain", {{"Cloudy", "True"}, {"WetGrass", "True"}})});
        }) == ErrorKind::InvalidArgument);
  const auto txt = query_text(table);
  CHECK(txt.find("0.7079") != std::string::npos);
}

TEST_CASE("sobol and scenario CSV layouts") {
  const auto net = golden("sprinkler.json");
  const auto m = sobol_matrix(net, {"WetGrass"});
  const auto text = sobol_csv(m);
  CHECK(text.rfind("input,WetGrass\n", 0) == 0);
  CHECK(text.find("WetGrass,--\n") != std::string::npos);
  CHECK(sobol_text(m).find("--") != std::string::npos);

  const auto rows = scenario_posteriors(net, {{"Baseline", {}}, {"Rainy", {{"Rain", "True"}}}},
                                        {"WetGrass"});
  const auto sc = csv::parse(scenario_csv(rows, 0));
  REQUIRE(sc.size() == 3);
  CHECK(sc[0] == csv::Record{"scenario", "evidence", "evidence_probability", "False", "True"});
  CHECK(sc[1][0] == "Baseline");
  CHECK(sc[1][1] == "(none)");
  CHECK(sc[2][1] == "Rain=True");
  CHECK(std::stod(sc[2][2]) == doctest::Approx(0.5));
  CHECK(describe_evidence({{"A", "a"}, {"B", "b"}}) == "A=a; B=b");
}

TEST_CASE("tornado and influence CSV") {
  const auto net = golden("sprinkler.json");
  const TargetEvent wet{"WetGrass", "True", {}};
  const auto bars = tornado(net, wet);
  const auto rec = csv::parse(tornado_csv(bars));
  REQUIRE(rec.size() == bars.size() + 1);
  CHECK(rec[0] == csv::Record{"variable", "row", "state", "label", "theta", "delta_up",
                              "delta_down", "shift_up", "shift_down", "direction"});
  CHECK(rec[1][3] == bars[0].label);
  CHECK(std::stod(rec[1][7]) == doctest::Approx(bars[0].shift_up).epsilon(1e-11));
  const auto inf = csv::parse(influence_csv(node_influence(net, wet)));
  CHECK(inf[0] == csv::Record{"variable", "influence"});
  CHECK(inf.size() == 5);
  CHECK(tornado_text(bars, wet, 0.1, false).find("WetGrass = True") != std::string::npos);
}

TEST_CASE("svg output is well formed and self contained") {
  const auto net = golden("framing.json");
  const auto rows = scenario_posteriors(
      net, {{"Baseline", {}}, {"Low <interest> & \"quotes\"", {{"Interest", "Low"}}}}, {"Framing"});
  const auto svg = scenario_svg(rows, 0);
  CHECK(xml_problem(svg) == "");
  CHECK_FALSE(external_reference(svg));
  CHECK(svg.find("Low &lt;interest&gt; &amp; &quot;quotes&quot;") != std::string::npos);
  CHECK(svg.find("<metadata>") == std::string::npos);
  SvgOptions stamped;
  stamped.timestamp = "2026-01-01T00:00:00Z";
  const auto svg2 = scenario_svg(rows, 0, stamped);
  CHECK(xml_problem(svg2) == "");
  CHECK(svg2.find("2026-01-01T00:00:00Z") != std::string::npos);

  const TargetEvent risk{"Framing", "Risk", {}};
  const auto bars = tornado(net, risk);
  const auto t = tornado_svg(bars, risk, 0.1);
  CHECK(xml_problem(t) == "");
  CHECK_FALSE(external_reference(t));
  CHECK(t.find("#2166ac") != std::string::npos);
  CHECK(t.find("#d6604d") != std::string::npos);
  CHECK(xml_escape("a<b>&\"'") == "a&lt;b&gt;&amp;&quot;&apos;");
}

TEST_CASE("baseline-only scenario chart has one group per level") {
  const auto net = golden("framing.json");
  const auto rows = scenario_posteriors(net, {{"Baseline", {}}}, {"Framing"});
  const auto svg = scenario_svg(rows, 0);
  CHECK(xml_problem(svg) == "");
  std::size_t groups = 0;
  for (auto p = svg.find("class=\"level\""); p != std::string::npos; p = svg.find("class=\"level\"", p + 1)) ++groups;
  CHECK(groups == 3);
}

TEST_CASE("tornado chart with all-zero bars still renders") {
  Rng rng(2);
  auto dag = Dag::from_parents({"A", "B"}, {});
  const auto net = bntest::random_cpts(rng, dag, {2, 2}, 1.0);
  TornadoOptions opt;
  opt.nodes = {"A"};
  const TargetEvent ev{"B", "s0", {}};
  const auto bars = tornado(net, ev, opt);
  REQUIRE(bars.size() == 2);
  CHECK(bars[0].magnitude() == 0.0);
  const auto svg = tornado_svg(bars, ev, 0.1);
  CHECK(xml_problem(svg) == "");
  CHECK(xml_problem(tornado_svg({}, ev, 0.1)) == "");
}

TEST_CASE("manifests round-trip") {
  RunManifest m;
  m.command = "learn";
  m.config = nlohmann::ordered_json::parse(R"({"bootstrap": 200, "tiers": [["A"]]})");
  m.seed = 18446744073709551615ull;
  m.seed_from_entropy = true;
  m.inputs = {{"data/full.csv", "0123456789abcdef"}};
  m.version = "1.0";
  m.started = utc_timestamp();
  m.elapsed_seconds = 1.5;
  m.outputs = {"models/full.json"};
  const auto back = RunManifest::from_json(nlohmann::ordered_json::parse(m.to_json().dump()));
  CHECK(back.seed == m.seed);
  CHECK(back.seed_from_entropy);
  CHECK(back.config == m.config);
  CHECK(back.inputs == m.inputs);
  CHECK(back.outputs == m.outputs);
  CHECK(std::regex_match(m.started, std::regex("\\d{4}-\\d\\d-\\d\\dT\\d\\d:\\d\\d:\\d\\dZ")));
}

TEST_CASE("workspace lock, containment and overwrite rules") {
  bntest::TempDir dir("ws");
  {
    Workspace ws(dir.path(), false);
    for (const char* sub : {"data", "models", "strengths", "reports"}) {
      CHECK(std::filesystem::is_directory(dir.path() / sub));
    }
    CHECK(std::filesystem::exists(dir.path() / Workspace::kLockFile));
    CHECK(kind_of([&] { Workspace second(dir.path(), false); }) == ErrorKind::Workspace);
    CHECK(kind_of([&] { ws.resolve("../outside.txt"); }) == ErrorKind::Workspace);
    CHECK(kind_of([&] { ws.resolve("/etc/passwd"); }) == ErrorKind::Workspace);
    ws.write("reports/a.txt", "one");
    CHECK(kind_of([&] { ws.write("reports/a.txt", "two"); }) == ErrorKind::Workspace);
    CHECK(ws.locate_input("reports/a.txt") == ws.resolve("reports/a.txt"));
  }
  CHECK_FALSE(std::filesystem::exists(dir.path() / Workspace::kLockFile));
  Workspace forced(dir.path(), true);
  forced.write("reports/a.txt", "two");
  std::ifstream in(dir.path() / "reports/a.txt");
  std::string content;
  in >> content;
  CHECK(content == "two");
  CHECK(safe_name("Age 14-29/x") == "Age_14-29_x");
}
