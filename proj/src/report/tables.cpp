#include "beliefnet/report/tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "beliefnet/core/error.hpp"
#include "beliefnet/data/csv.hpp"
#include "beliefnet/util/format.hpp"

namespace beliefnet::report {
namespace {

std::string percent_cell(double v, int decimals) {
  return std::isnan(v) ? "--" : format_fixed(v, decimals);
}

}  // namespace

std::string describe_evidence(const Evidence& evidence) {
  if (evidence.empty()) return "(none)";
  std::string out;
  for (const auto& [name, level] : evidence.assignments()) {
    if (!out.empty()) out += "; ";
    out += name + "=" + level;
  }
  return out;
}

QueryTable query_table(const std::vector<QueryResult>& results) {
  QueryTable table;
  if (results.empty()) return table;
  table.target = results.front().target;
  table.levels = results.front().levels;
  for (const auto& r : results) {
    if (r.target != table.target) {
      throw Error(ErrorKind::InvalidArgument, "query table mixes targets");
    }
    QueryTable::Row row;
    if (r.evidence.size() > 1) {
      throw Error(ErrorKind::InvalidArgument, "query table rows take one evidence variable");
    }
    if (r.evidence.empty()) {
      row.evidence_value = std::string(kBaseline);
    } else {
      row.evidence_variable = r.evidence.assignments().begin()->first;
      row.evidence_value = r.evidence.assignments().begin()->second;
    }
    row.distribution = r.distribution;
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string query_csv(const QueryTable& table) {
  csv::Record header{"evidence_variable", "evidence_value"};
  header.insert(header.end(), table.levels.begin(), table.levels.end());
  std::string out = csv::join(header) + "\n";
  for (const auto& row : table.rows) {
    csv::Record rec{row.evidence_variable, row.evidence_value};
    for (double p : row.distribution) rec.push_back(format_number(p));
    out += csv::join(rec) + "\n";
  }
  return out;
}

QueryTable parse_query_csv(std::string_view text, std::string target) {
  const auto records = csv::parse(text);
  if (records.empty() || records.front().size() < 3 ||
      records.front()[0] != "evidence_variable" || records.front()[1] != "evidence_value") {
    throw Error(ErrorKind::MalformedFile, "query CSV header is missing");
  }
  QueryTable table;
  table.target = std::move(target);
  table.levels.assign(records.front().begin() + 2, records.front().end());
  const auto width = records.front().size();
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != width) {
      throw Error(ErrorKind::MalformedFile, "query CSV row has the wrong width", r);
    }
    QueryTable::Row row{rec[0], rec[1], Eigen::VectorXd(static_cast<Eigen::Index>(width - 2))};
    for (std::size_t c = 2; c < width; ++c) {
      char* end = nullptr;
      const double v = std::strtod(rec[c].c_str(), &end);
      if (rec[c].empty() || *end != '\0') {
        throw Error(ErrorKind::MalformedFile, "query CSV cell '" + rec[c] + "' is not a number", r);
      }
      row.distribution[static_cast<Eigen::Index>(c - 2)] = v;
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string sobol_csv(const SobolMatrix& matrix) {
  csv::Record header{"input"};
  header.insert(header.end(), matrix.targets.begin(), matrix.targets.end());
  std::string out = csv::join(header) + "\n";
  for (std::size_t i = 0; i < matrix.inputs.size(); ++i) {
    csv::Record rec{matrix.inputs[i]};
    for (Eigen::Index c = 0; c < matrix.percent.cols(); ++c) {
      const double v = matrix.percent(static_cast<Eigen::Index>(i), c);
      rec.push_back(std::isnan(v) ? "--" : format_number(v));
    }
    out += csv::join(rec) + "\n";
  }
  return out;
}

std::string scenario_csv(const std::vector<ScenarioRow>& rows, std::size_t target) {
  if (rows.empty()) return "scenario,evidence,evidence_probability\n";
  const auto& first = rows.front().posteriors.at(target);
  csv::Record header{"scenario", "evidence", "evidence_probability"};
  header.insert(header.end(), first.levels.begin(), first.levels.end());
  std::string out = csv::join(header) + "\n";
  for (const auto& row : rows) {
    const auto& q = row.posteriors.at(target);
    csv::Record rec{row.scenario, describe_evidence(q.evidence),
                    format_number(row.evidence_probability)};
    for (double p : q.distribution) rec.push_back(format_number(p));
    out += csv::join(rec) + "\n";
  }
  return out;
}

std::string tornado_csv(const std::vector<TornadoBar>& bars) {
  std::string out =
      "variable,row,state,label,theta,delta_up,delta_down,shift_up,shift_down,direction\n";
  for (const auto& b : bars) {
    out += csv::join({b.id.variable, std::to_string(b.id.row), std::to_string(b.id.state),
                      b.label, format_number(b.theta), format_number(b.delta_up),
                      format_number(b.delta_down), format_number(b.shift_up),
                      format_number(b.shift_down), std::to_string(b.direction)}) +
           "\n";
  }
  return out;
}

std::string influence_csv(const std::map<std::string, double>& influence) {
  std::string out = "variable,influence\n";
  for (const auto& [name, v] : influence) {
    out += csv::join({name, format_number(v)}) + "\n";
  }
  return out;
}

std::string text_table(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  auto measure = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) {
      width[c] = std::max(width[c], r[c].size());
    }
  };
  measure(header);
  for (const auto& r : rows) measure(r);
  auto line = [&](const std::vector<std::string>& r) {
    std::string out;
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string cell = c < r.size() ? r[c] : "";
      if (c > 0) out += "  ";
      // Left-align the first column, right-align the rest.
      if (c == 0) {
        out += cell + std::string(width[c] - cell.size(), ' ');
      } else {
        out += std::string(width[c] - cell.size(), ' ') + cell;
      }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out + "\n";
  };
  std::string out = line(header);
  std::size_t total = 0;
  for (auto w : width) total += w;
  out += std::string(total + 2 * (width.empty() ? 0 : width.size() - 1), '-') + "\n";
  for (const auto& r : rows) out += line(r);
  return out;
}

std::string query_text(const QueryTable& table) {
  std::vector<std::string> header{"Evidence"};
  header.insert(header.end(), table.levels.begin(), table.levels.end());
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : table.rows) {
    std::vector<std::string> r{row.evidence_variable.empty()
                                   ? row.evidence_value
                                   : row.evidence_variable + " = " + row.evidence_value};
    for (double p : row.distribution) r.push_back(format_fixed(p, 4));
    rows.push_back(std::move(r));
  }
  return "Target: " + table.target + "\n\n" + text_table(header, rows);
}

std::string sobol_text(const SobolMatrix& matrix) {
  std::vector<std::string> header{"Input"};
  header.insert(header.end(), matrix.targets.begin(), matrix.targets.end());
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < matrix.inputs.size(); ++i) {
    std::vector<std::string> r{matrix.inputs[i]};
    for (Eigen::Index c = 0; c < matrix.percent.cols(); ++c) {
      r.push_back(percent_cell(matrix.percent(static_cast<Eigen::Index>(i), c), 1));
    }
    rows.push_back(std::move(r));
  }
  return "First-order Sobol indices (% of target variance)\n\n" + text_table(header, rows);
}

std::string scenario_text(const std::vector<ScenarioRow>& rows, std::size_t target) {
  if (rows.empty()) return "";
  const auto& first = rows.front().posteriors.at(target);
  std::vector<std::string> header{"Scenario", "P(e)"};
  header.insert(header.end(), first.levels.begin(), first.levels.end());
  std::vector<std::vector<std::string>> body;
  for (const auto& row : rows) {
    std::vector<std::string> r{row.scenario, format_fixed(row.evidence_probability, 4)};
    for (double p : row.posteriors.at(target).distribution) r.push_back(format_fixed(p, 4));
    body.push_back(std::move(r));
  }
  return "Target: " + first.target + "\n\n" + text_table(header, body);
}

std::string tornado_text(const std::vector<TornadoBar>& bars, const TargetEvent& event,
                         double delta, bool finite_difference) {
  std::string out = "Event: " + event.variable + " = " + event.state + "\n";
  out += "Evidence: " + describe_evidence(event.evidence) + "\n";
  out += "Delta: " + format_number(delta) + " (clipped to [0, 1])\n";
  if (finite_difference) {
    out += "Note: evidence present; slopes are finite differences, not exact.\n";
  }
  out += "\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& b : bars) {
    rows.push_back({b.label, format_fixed(b.theta, 4), format_fixed(b.shift_down, 4),
                    format_fixed(b.shift_up, 4)});
  }
  return out + text_table({"Parameter", "Value", "Shift(-)", "Shift(+)"}, rows);
}

}  // namespace beliefnet::report
