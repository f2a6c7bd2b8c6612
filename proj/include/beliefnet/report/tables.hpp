#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>
#include <vector>

#include "beliefnet/analysis/scenario.hpp"
#include "beliefnet/analysis/sensitivity.hpp"
#include "beliefnet/analysis/sobol.hpp"
#include "beliefnet/infer/elimination.hpp"

namespace beliefnet::report {

/// A conditional probability table as printed: one row per evidence value,
/// the first row being the marginal (empty evidence variable, value
/// "Baseline").
struct QueryTable {
  struct Row {
    std::string evidence_variable;
    std::string evidence_value;
    Eigen::VectorXd distribution;
  };
  std::string target;
  std::vector<std::string> levels;
  std::vector<Row> rows;
};

inline constexpr std::string_view kBaseline = "Baseline";

// Rows with at most one evidence variable; throws InvalidArgument otherwise.
QueryTable query_table(const std::vector<QueryResult>& results);

// Columns: evidence_variable, evidence_value, one per target level.
std::string query_csv(const QueryTable& table);
// Inverse of query_csv; `target` names the table. Throws MalformedFile.
QueryTable parse_query_csv(std::string_view text, std::string target);

// Columns: input, one per target; "--" where the input is the target.
std::string sobol_csv(const SobolMatrix& matrix);

// One row per scenario: scenario, evidence, evidence_probability, levels.
std::string scenario_csv(const std::vector<ScenarioRow>& rows, std::size_t target);

std::string tornado_csv(const std::vector<TornadoBar>& bars);

std::string influence_csv(const std::map<std::string, double>& influence);

/// Fixed-width text table for human-readable reports.
std::string text_table(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows);

// Report renderings rounded to 4 decimals.
std::string query_text(const QueryTable& table);
std::string sobol_text(const SobolMatrix& matrix);
std::string scenario_text(const std::vector<ScenarioRow>& rows, std::size_t target);
std::string tornado_text(const std::vector<TornadoBar>& bars, const TargetEvent& event,
                         double delta, bool finite_difference);

// "A=a; B=b" or "(none)".
std::string describe_evidence(const Evidence& evidence);

}  // namespace beliefnet::report
