// Writes the synthetic survey used by the tests and demos.
//
// A hand-built generator network over the survey questions (raw answer
// codes, including rare "don't know" answers) is sampled ancestrally; the
// open-ended indicator columns are then drawn from per-theme latent
// mentions for respondents who were asked the follow-up question.
//
// usage: make_fixture <out_dir> [rows=1506] [seed=20230626]

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "beliefnet/core/model_io.hpp"
#include "beliefnet/core/network.hpp"
#include "beliefnet/data/csv.hpp"
#include "beliefnet/infer/sample.hpp"
#include "beliefnet/util/random.hpp"

using namespace beliefnet;

namespace {

struct Parent {
  std::string name;
  double weight;
};

// Level i of a question is answered with code i + 1; "Don't know" answers
// are code 9. `scores` position each level on the axis a parent pushes along.
struct Question {
  std::string name;
  std::string column;
  std::vector<std::string> levels;
  std::vector<double> scores;
  std::vector<double> base;  // logits of the substantive levels
  double dont_know = 0.0;    // probability of a "Don't know" answer
  std::vector<Parent> parents;
};

std::vector<double> centered(std::size_t n) {
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = n == 1 ? 0.0 : -1.0 + 2.0 * i / (n - 1.0);
  return s;
}

const std::vector<std::string> kAgree{"Strongly disagree", "Somewhat disagree", "Somewhat agree",
                                      "Strongly agree"};

Question agree(std::string name, std::string column, std::vector<double> base, double dk,
               std::vector<Parent> parents) {
  return {std::move(name), std::move(column), kAgree, centered(4), std::move(base), dk,
          std::move(parents)};
}

std::vector<Question> questions() {
  const std::vector<std::string> yes_no{"Yes", "No"};
  const std::vector<double> yes_no_scores{1.0, -1.0};
  return {
      {"Sex", "sex", {"Female", "Male"}, {-1.0, 1.0}, {0.05, 0.0}, 0.0, {}},
      {"Age", "agegrp", {"14-29", "30-44", "45-59", "60+"}, centered(4), {-0.3, 0.0, 0.15, 0.35}, 0.0, {}},
      {"Education", "educ", {"Low", "Medium", "High"}, centered(3), {-0.2, 0.3, 0.1}, 0.0,
       {{"Age", -0.5}}},
      {"Income", "income", {"Low", "Medium", "High", "Not reported"}, {-1.0, 0.0, 1.0, 0.0},
       {-0.1, 0.5, 0.0, -0.6}, 0.0, {{"Education", 0.9}}},
      {"Municipality", "municip", {"<5k", "5k-19k", "20k-99k", "100k-499k", "500k+"}, centered(5),
       {0.0, 0.2, 0.3, 0.0, 0.1}, 0.0, {}},
      // Party preference: SPD, CDU/CSU, Greens, FDP, AfD, Left party, other
      // party, would not vote; "don't know" is code 9.
      {"Party", "party",
       {"SPD", "CDU/CSU", "Greens", "FDP", "AfD", "Left party", "Other party", "Non-voter"},
       {1.0, -1.0, 1.0, -1.0, -1.0, 1.0, 0.0, 0.0},
       {0.2, 0.5, 0.0, -0.7, -0.1, -0.9, -0.8, -0.3}, 0.06, {{"Age", -0.4}, {"Education", 0.5}}},
      {"InterestAI", "interest_ai", {"Not at all", "Less strongly", "Strongly", "Very strongly"},
       centered(4), {0.0, 0.5, 0.2, -0.6}, 0.012,
       {{"Sex", 0.35}, {"Age", -0.6}, {"Education", 0.7}}},
      {"InformedAI", "informed_ai", {"Very poor", "Rather poor", "Rather good", "Very good"},
       centered(4), {-0.6, 0.5, 0.4, -0.9}, 0.015, {{"InterestAI", 1.3}, {"Education", 0.4}}},
      {"MediaAI", "media_ai", yes_no, yes_no_scores, {1.0, 0.0}, 0.0, {{"InterestAI", 0.8}}},
      {"FriendsAI", "friends_ai", yes_no, yes_no_scores, {-0.1, 0.0}, 0.0,
       {{"InterestAI", 1.1}, {"Age", -0.5}}},
      {"SearchAI", "search_ai", yes_no, yes_no_scores, {-0.6, 0.0}, 0.0,
       {{"InterestAI", 1.2}, {"InformedAI", 0.5}}},
      {"DevelopAI", "develop_ai", {"Both", "Opportunity", "Risk"}, {0.0, 1.0, -1.0},
       {-0.5, -0.1, 0.2}, 0.01, {{"InterestAI", 0.9}, {"Sex", 0.35}}},
      agree("AIEasierLife", "easier_life", {-0.4, 0.2, 0.4, -0.3}, 0.012,
            {{"DevelopAI", 1.1}, {"InterestAI", 0.5}}),
      agree("AIFieldBenefit", "field_benefit", {-0.5, 0.0, 0.5, 0.1}, 0.014,
            {{"AIEasierLife", 0.9}, {"InterestAI", 0.5}}),
      agree("AIReduceShortageWorkers", "shortage_workers", {-0.3, 0.2, 0.4, -0.2}, 0.016,
            {{"AIEasierLife", 0.8}}),
      {"AIHealtcareBenefit", "healthcare_benefit", {"Strongly disagree", "Somewhat disagree",
                                                    "Somewhat agree", "Strongly agree",
                                                    "Don't know"},
       {-1.0, -1.0 / 3, 1.0 / 3, 1.0, 0.0}, {-0.7, -0.1, 0.5, 0.3, -1.4}, 0.0,
       {{"AIFieldBenefit", 0.9}}},
      agree("AIUncontrollable", "uncontrollable", {-0.2, 0.1, 0.2, 0.0}, 0.012,
            {{"AIEasierLife", -0.9}, {"Age", 0.4}}),
      agree("AIFalseInfo", "false_info", {-1.0, -0.3, 0.5, 0.6}, 0.01,
            {{"AIUncontrollable", 0.9}}),
      agree("AIvsHuman", "vs_human", {-0.5, 0.0, 0.5, 0.3}, 0.015,
            {{"AIUncontrollable", 0.6}}),
      {"HeardEURegulation", "heard_eu_reg", yes_no, yes_no_scores, {-1.3, 0.0}, 0.0,
       {{"InterestAI", 1.0}, {"Party", 0.3}, {"SearchAI", 0.3}}},
      {"EUAppropriateRegulation", "eu_reg_view",
       {"Not strict enough", "Appropriate", "Too strict", "Don't know"}, {-1.0, 0.0, 1.0, 0.0},
       {0.2, 0.7, -0.9, -1.1}, 0.0, {{"AIUncontrollable", -0.7}, {"HeardEURegulation", 0.2}}},
      {"AIRegulations", "legal_req", yes_no, yes_no_scores, {2.1, 0.0}, 0.008,
       {{"EUAppropriateRegulation", -1.0}, {"Party", 0.4}, {"MediaAI", 0.4}}},
  };
}

// Generator levels: the substantive levels plus "Don't know" when asked.
std::vector<std::string> generator_levels(const Question& q) {
  auto levels = q.levels;
  if (q.dont_know > 0.0) levels.push_back("Don't know (code 9)");
  return levels;
}

std::vector<double> generator_scores(const Question& q) {
  auto s = q.scores;
  if (q.dont_know > 0.0) s.push_back(0.0);
  return s;
}

FittedNetwork generator() {
  const auto qs = questions();
  std::vector<Variable> vars;
  std::vector<std::string> names;
  for (const auto& q : qs) {
    vars.emplace_back(q.name, generator_levels(q), false);
    names.push_back(q.name);
  }
  Dag dag(names);
  auto index = [&](const std::string& n) { return dag.index_of(n); };
  for (const auto& q : qs) {
    for (const auto& p : q.parents) dag.add_arc(index(p.name), index(q.name));
  }
  std::vector<ProbabilityMatrix> tables;
  for (std::size_t v = 0; v < qs.size(); ++v) {
    const Question& q = qs[v];
    const auto& parents = dag.parents(static_cast<int>(v));
    std::vector<int> cards;
    for (int p : parents) cards.push_back(vars[p].cardinality());
    const int rows = configuration_count(cards);
    const int r = vars[v].cardinality();
    ProbabilityMatrix table(rows, r);
    for (int j = 0; j < rows; ++j) {
      const auto states = configuration_states(j, cards);
      double push = 0.0;
      for (std::size_t i = 0; i < parents.size(); ++i) {
        const Question& pq = qs[parents[i]];
        double w = 0.0;
        for (const auto& p : q.parents) {
          if (p.name == pq.name) w = p.weight;
        }
        push += w * generator_scores(pq)[states[i]];
      }
      const std::size_t n = q.levels.size();
      std::vector<double> logits(n);
      double z = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        logits[k] = std::exp(q.base[k] + push * q.scores[k]);
        z += logits[k];
      }
      const double substantive = 1.0 - q.dont_know;
      for (std::size_t k = 0; k < n; ++k) table(j, static_cast<Eigen::Index>(k)) = substantive * logits[k] / z;
      if (q.dont_know > 0.0) table(j, r - 1) = q.dont_know;
    }
    tables.push_back(std::move(table));
  }
  return FittedNetwork(std::move(vars), std::move(dag), std::move(tables),
                       {{"purpose", "synthetic survey generator"}});
}

struct Theme {
  std::string prefix;
  int first;
  int count;
  std::string driver;  // generator variable shifting the latent mention rate
  double rate;
  double slope;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: make_fixture <out_dir> [rows] [seed]\n";
    return 1;
  }
  const std::filesystem::path out = argv[1];
  const int rows = argc > 2 ? std::atoi(argv[2]) : 1506;
  const std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 20230626ULL;
  std::filesystem::create_directories(out);

  const FittedNetwork net = generator();
  const DataTable sample_table = sample(net, static_cast<std::size_t>(rows), seed);
  Rng rng(derive_seed(seed, 1));

  const auto qs = questions();
  const std::vector<Theme> opportunity{{"opp", 1, 5, "AIReduceShortageWorkers", 0.30, 0.12},
                                       {"opp", 6, 5, "AIHealtcareBenefit", 0.22, 0.10},
                                       {"opp", 11, 5, "AIEasierLife", 0.28, 0.14},
                                       {"opp", 16, 5, "InterestAI", 0.25, 0.10},
                                       {"opp", 21, 4, "AIFieldBenefit", 0.20, 0.08}};
  const std::vector<Theme> risk{{"risk", 1, 4, "Age", 0.33, -0.10},
                                {"risk", 5, 4, "AIUncontrollable", 0.27, 0.15},
                                {"risk", 9, 4, "EUAppropriateRegulation", 0.22, -0.10},
                                {"risk", 13, 3, "AIFalseInfo", 0.24, 0.12},
                                {"risk", 16, 3, "Education", 0.15, 0.06}};

  csv::Record header{"respondent"};
  for (const auto& q : qs) header.push_back(q.column);
  auto indicator_name = [](const std::string& prefix, int i) {
    return prefix + (i < 10 ? "_0" : "_") + std::to_string(i);
  };
  for (int i = 1; i <= 24; ++i) header.push_back(indicator_name("opp", i));
  for (int i = 1; i <= 18; ++i) header.push_back(indicator_name("risk", i));

  std::string text = csv::join(header) + "\n";
  const int develop = net.index_of("DevelopAI");
  for (std::size_t r = 0; r < sample_table.rows(); ++r) {
    csv::Record rec{std::to_string(r + 1)};
    for (std::size_t v = 0; v < qs.size(); ++v) {
      const int state = sample_table.value(r, static_cast<int>(v));
      const bool dk = (qs[v].dont_know > 0.0 && state == static_cast<int>(qs[v].levels.size())) ||
                      net.variable(static_cast<int>(v)).level(state) == "Don't know";
      std::string token = dk ? "9" : std::to_string(state + 1);
      // A few interviews break off or refuse single items (code 99).
      if (uniform01(rng) < 0.003) token = "99";
      rec.push_back(token);
    }
    const std::string framing = net.variable(develop).level(sample_table.value(r, develop));
    auto emit = [&](const std::vector<Theme>& themes, bool asked) {
      for (const auto& t : themes) {
        const int d = net.index_of(t.driver);
        const auto& scores = generator_scores(qs[d]);
        const double rate = t.rate + t.slope * scores[sample_table.value(r, d)];
        const bool latent = uniform01(rng) < rate;
        for (int i = 0; i < t.count; ++i) {
          if (!asked) {
            rec.push_back("");
            continue;
          }
          const double p = latent ? (i == 0 ? 0.7 : 0.35) : 0.015;
          rec.push_back(uniform01(rng) < p ? "1" : "0");
        }
      }
    };
    emit(opportunity, framing == "Opportunity" || framing == "Both");
    emit(risk, framing == "Risk" || framing == "Both");
    text += csv::join(rec) + "\n";
  }
  csv::write_file(out / "survey.csv", text);
  save_model(net, out / "generator.json");
  std::cout << "wrote " << (out / "survey.csv").string() << " (" << rows << " rows)\n";
  return 0;
}
