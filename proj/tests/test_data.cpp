#include <doctest.h>

#include <functional>

#include "beliefnet/core/error.hpp"
#include "beliefnet/data/config.hpp"
#include "beliefnet/data/counts.hpp"
#include "beliefnet/data/csv.hpp"
#include "beliefnet/data/data_table.hpp"
#include "beliefnet/data/pipeline.hpp"
#include "beliefnet/data/raw_table.hpp"
#include "support.hpp"

using namespace beliefnet;

namespace {

Error error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  FAIL("no error thrown");
  return Error(ErrorKind::Io, "");
}

Variable indicator(const std::string& name) { return Variable(name, {kMentioned, kNotMentioned}); }

constexpr int M = 0;   // Mentioned
constexpr int N = 1;   // Not mentioned
constexpr int X = kMissing;

}  // namespace

TEST_CASE("csv parser handles quotes, CRLF and a byte-order mark") {
  const auto recs = csv::parse("\xEF\xBB\xBF" "a,b,c\r\n\"x, y\",\"say \"\"hi\"\"\",\"two\nlines\"\r\n,,\n");
  REQUIRE(recs.size() == 3);
  CHECK(recs[0] == csv::Record{"a", "b", "c"});
  CHECK(recs[1] == csv::Record{"x, y", "say \"hi\"", "two\nlines"});
  CHECK(recs[2] == csv::Record{"", "", ""});
  CHECK(csv::escape("plain") == "plain");
  CHECK(csv::escape("a,b") == "\"a,b\"");
  CHECK(csv::escape("q\"") == "\"q\"\"\"");
  CHECK(csv::join({"1", "a b", "c,d"}) == "1,a b,\"c,d\"");
  CHECK(error_of([] { csv::parse("a,\"open\n"); }).kind() == ErrorKind::MalformedFile);
}

TEST_CASE("raw tables report ragged rows by data row number") {
  const auto raw = parse_raw_table("id,q1\n1,2\n2,3\n", {"q1"});
  CHECK(raw.rows.size() == 2);
  CHECK(raw.find_column("q1") == 1);
  CHECK(raw.fingerprint.rows == 2);
  CHECK(raw.fingerprint.hash.size() == 16);

  const auto e = error_of([] { parse_raw_table("id,q1\n1,2\n2\n3,4\n"); });
  CHECK(e.kind() == ErrorKind::RaggedRow);
  CHECK(e.index() == std::optional<std::size_t>(2));
  CHECK(error_of([] { parse_raw_table("id,q1\n1,2\n", {"q2"}); }).kind() ==
        ErrorKind::MissingColumn);
  CHECK(error_of([] { load_csv("/nonexistent/beliefnet.csv"); }).kind() == ErrorKind::Io);
}

TEST_CASE("recode applies mapping, missing tokens and level labels in that order") {
  const auto raw = parse_raw_table("interest,heard\n1,Yes\n4,No\n9,Yes\n99,No\n2,\n");
  RecodeSpec spec;
  VariableRecode interest{"InterestAI", "interest", {"Low", "High", "Don't know"}, {}, {"99"}};
  interest.mapping = {{"1", "Low"}, {"2", "Low"}, {"4", "High"}, {"9", "Don't know"}};
  VariableRecode heard{"Heard", "heard", {"Yes", "No"}, {{"", std::nullopt}}, {}};
  spec.variables = {interest, heard};
  const auto t = recode(raw, spec);
  CHECK(t.variable(0).name() == "InterestAI");
  CHECK(std::vector<int>(t.column(0).begin(), t.column(0).end()) == std::vector<int>{0, 1, 2, X, 0});
  CHECK(std::vector<int>(t.column(1).begin(), t.column(1).end()) == std::vector<int>{0, 1, 0, 1, X});

  spec.variables[0].mapping.erase("2");
  const auto e = error_of([&] { recode(raw, spec); });
  CHECK(e.kind() == ErrorKind::UnmappedToken);
  CHECK(std::string(e.what()).find("'2'") != std::string::npos);
  spec.variables[0].unmapped = UnmappedPolicy::Missing;
  CHECK(recode(raw, spec).value(4, 0) == X);

  spec.variables[0].column = "nope";
  CHECK(error_of([&] { recode(raw, spec); }).kind() == ErrorKind::MissingColumn);
}

TEST_CASE("collapse_rare drops levels below the count and keeps the rest in order") {
  Variable v("Q", {"a", "b", "c", "d"});
  std::vector<int> col;
  // a: 60, b: 49, c: 50, d: 3, plus 5 missing
  for (int i = 0; i < 60; ++i) col.push_back(0);
  for (int i = 0; i < 49; ++i) col.push_back(1);
  for (int i = 0; i < 50; ++i) col.push_back(2);
  for (int i = 0; i < 3; ++i) col.push_back(3);
  for (int i = 0; i < 5; ++i) col.push_back(X);
  DataTable t({v}, {col});
  const auto out = collapse_rare(t, "Q", 50);
  CHECK(out.variable(0).levels() == std::vector<std::string>{"a", "c"});
  // Brute-force tally of the result against the input labels.
  int a = 0, c = 0, missing = 0;
  for (std::size_t r = 0; r < out.rows(); ++r) {
    const int before = t.value(r, 0);
    const int after = out.value(r, 0);
    if (after == X) {
      ++missing;
      CHECK((before == X || before == 1 || before == 3));
    } else {
      CHECK(out.variable(0).level(after) == t.variable(0).level(before));
      (after == 0 ? a : c)++;
    }
  }
  CHECK(a == 60);
  CHECK(c == 50);
  CHECK(missing == 49 + 3 + 5);
  CHECK(collapse_rare(t, "Q", 3) == t);
  CHECK(error_of([&] { collapse_rare(t, "Q", 55); }).kind() == ErrorKind::InvalidArgument);
}

TEST_CASE("drop_incomplete keeps rows complete on the listed variables") {
  DataTable t({Variable("A", {"0", "1"}), Variable("B", {"0", "1"})},
              {{0, X, 1, 1}, {X, 0, 1, 0}});
  CHECK(drop_incomplete(t, {"A"}).rows() == 3);
  const auto both = drop_incomplete(t, {"A", "B"});
  CHECK(both.rows() == 2);
  CHECK(both.value(0, 0) == 1);
  CHECK(both.complete_rows() == 2);
}

TEST_CASE("themes follow the any-mentioned rule") {
  // Every combination of two members over {M, N, missing}.
  std::vector<int> m1, m2;
  for (int a : {M, N, X})
    for (int b : {M, N, X}) {
      m1.push_back(a);
      m2.push_back(b);
    }
  DataTable t({indicator("opp_01"), indicator("opp_02"), Variable("Other", {"x", "y"})},
              {m1, m2, std::vector<int>(9, 0)});
  const auto out = group_themes(t, {{"PosWork", {"opp_01", "opp_02"}, "opportunity"}});
  REQUIRE(out.cols() == 2);
  CHECK(out.variable(0).name() == "Other");
  const int c = out.index_of("PosWork");
  for (std::size_t r = 0; r < 9; ++r) {
    const int expected = (m1[r] == M || m2[r] == M) ? M : (m1[r] == N && m2[r] == N) ? N : X;
    CHECK(out.value(r, c) == expected);
  }
  CHECK(error_of([&] { group_themes(t, {{"T", {"Other"}, ""}}); }).kind() ==
        ErrorKind::NonBinaryMember);
  const auto e = error_of([&] { group_themes(t, {{"T", {"opp_09"}, ""}}); });
  CHECK(e.kind() == ErrorKind::UnknownVariable);
  CHECK(std::string(e.what()).find("opp_09") != std::string::npos);
}

TEST_CASE("split_population puts Both in each subpopulation") {
  Variable framing("DevelopAI", {"Both", "Opportunity", "Risk"});
  DataTable t({framing, Variable("Id", {"0", "1", "2", "3", "4", "5"})},
              {{0, 1, 2, X, 2, 1}, {0, 1, 2, 3, 4, 5}});
  auto [risk, opp] = split_population(t);
  auto ids = [](const DataTable& d) {
    std::vector<int> out;
    for (std::size_t r = 0; r < d.rows(); ++r) out.push_back(d.value(r, 1));
    return out;
  };
  CHECK(ids(risk) == std::vector<int>{0, 2, 4});
  CHECK(ids(opp) == std::vector<int>{0, 1, 5});
  FramingLevels bad;
  bad.risk = "Threat";
  CHECK(error_of([&] { split_population(t, bad); }).kind() == ErrorKind::UnknownLevel);
}

TEST_CASE("count tables match a direct tally") {
  Rng rng(2);
  std::vector<Variable> vars{{"A", {"0", "1"}}, {"B", {"0", "1", "2"}}, {"C", {"0", "1"}}};
  std::vector<std::vector<int>> cols(3);
  for (int r = 0; r < 500; ++r) {
    cols[0].push_back(uniform01(rng) < 0.05 ? X : bntest::uniform_int(rng, 0, 1));
    cols[1].push_back(bntest::uniform_int(rng, 0, 2));
    cols[2].push_back(bntest::uniform_int(rng, 0, 1));
  }
  DataTable t(vars, cols);
  const auto ct = counts(t, "C", {"A", "B"});
  CHECK(ct.configurations() == 6);
  std::int64_t seen = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 2; ++c) {
        std::int64_t n = 0;
        for (int r = 0; r < 500; ++r) n += cols[0][r] == a && cols[1][r] == b && cols[2][r] == c;
        CHECK(ct.counts(a * 3 + b, c) == n);
        seen += n;
      }
  CHECK(ct.total() == seen);
  const auto marg = marginalize_parent(ct, 0);
  CHECK(marg.parents == std::vector<int>{1});
  CHECK(marg.counts.sum() == seen);
}

TEST_CASE("data tables round-trip through CSV and dictionary") {
  bntest::TempDir dir("data");
  DataTable t({Variable("Age", {"14-29", "60+"}, true), Variable("Note", {"a,b", "say \"x\""})},
              {{0, 1, X}, {1, X, 0}});
  save_data_table(t, dir.path() / "t.csv", dir.path() / "t.dictionary.json");
  const auto back = load_data_table(dir.path() / "t.csv", dir.path() / "t.dictionary.json");
  CHECK(back == t);
  CHECK(back.variable(0).ordinal());
  CHECK(t.select_columns({"Note"}).cols() == 1);
  CHECK(t.drop_columns({"Note"}).variable(0).name() == "Age");
  const auto e = error_of([&] { parse_data_table("Age,Note\n14-29\n", t.variables()); });
  CHECK(e.kind() == ErrorKind::RaggedRow);
  CHECK(error_of([&] { parse_data_table("Age,Note\nold,a\n", t.variables()); }).kind() ==
        ErrorKind::UnknownLevel);
  CHECK(error_of([&] { DataTable({Variable("A", {"0"})}, {{0, 1}}); }).kind() ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("config errors name the file and position") {
  const auto e = error_of([] { config::parse("{\n  \"min_count\": 5,\n  oops\n}", "prep.json"); });
  CHECK(e.kind() == ErrorKind::Config);
  CHECK(std::string(e.what()).find("prep.json:3:") != std::string::npos);

  const auto doc = config::parse(R"({
    // comments are allowed
    "min_count": 10,
    "variables": [
      {"name": "Sex", "column": "sex", "levels": ["Female", "Male"],
       "map": {"1": "Female", "2": "Male", "9": null}, "missing": [99]}
    ],
    "themes": [{"name": "PosWork", "members": ["opp_01"], "population": "opportunity"}],
    "framing": {"variable": "Frame"}
  })", "prep.json");
  const auto spec = config::recode_spec(doc, "prep.json");
  CHECK(spec.min_count == 10);
  REQUIRE(spec.variables.size() == 1);
  CHECK(spec.variables[0].column == "sex");
  CHECK(spec.variables[0].mapping.at("9") == std::nullopt);
  CHECK(spec.variables[0].missing_tokens == std::vector<std::string>{"99"});
  CHECK(config::theme_specs(doc, "prep.json")[0].population == "opportunity");
  CHECK(config::framing_levels(doc, "prep.json").variable == "Frame");
  CHECK(config::framing_levels(doc, "prep.json").risk == "Risk");

  const auto bad = config::parse(R"({"variables": [{"name": "Sex", "levels": "x"}]})", "p.json");
  const auto e2 = error_of([&] { config::recode_spec(bad, "p.json"); });
  CHECK(e2.kind() == ErrorKind::Config);
  CHECK(std::string(e2.what()).find("/variables/0/levels") != std::string::npos);

  const auto tiers = config::tier_spec(
      config::parse(R"({"tiers": [["A", "B"], {"variables": ["C"], "within_tier_edges": false}]})",
                    "t.json"),
      "t.json");
  CHECK(tiers.tiers.size() == 2);
  CHECK(tiers.allows_within(0));
  CHECK_FALSE(tiers.allows_within(1));
}
