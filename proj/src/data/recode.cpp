#include <algorithm>

#include "beliefnet/core/error.hpp"
#include "beliefnet/data/pipeline.hpp"

namespace beliefnet {

std::vector<std::string> RecodeSpec::raw_columns() const {
  std::vector<std::string> out;
  for (const auto& v : variables) out.push_back(v.column.empty() ? v.name : v.column);
  return out;
}

DataTable recode(const RawTable& raw, const RecodeSpec& spec) {
  std::vector<Variable> vars;
  std::vector<std::vector<int>> cols;
  for (const auto& rv : spec.variables) {
    const std::string& column = rv.column.empty() ? rv.name : rv.column;
    auto c = raw.find_column(column);
    if (!c) {
      throw Error(ErrorKind::MissingColumn, "column '" + column +
                                                "' needed by variable '" +
                                                rv.name + "' not found");
    }
    Variable var(rv.name, rv.levels, rv.ordinal);
    std::vector<int> col;
    col.reserve(raw.rows.size());
    for (const auto& row : raw.rows) {
      const std::string& token = row[*c];
      if (auto it = rv.mapping.find(token); it != rv.mapping.end()) {
        col.push_back(it->second ? var.level_index(*it->second) : kMissing);
      } else if (std::find(rv.missing_tokens.begin(), rv.missing_tokens.end(),
                           token) != rv.missing_tokens.end()) {
        col.push_back(kMissing);
      } else if (auto k = var.find_level(token)) {
        col.push_back(*k);
      } else if (rv.unmapped == UnmappedPolicy::Missing) {
        col.push_back(kMissing);
      } else {
        throw Error(ErrorKind::UnmappedToken, "variable '" + rv.name +
                                                  "': token '" + token +
                                                  "' has no mapping");
      }
    }
    vars.push_back(std::move(var));
    cols.push_back(std::move(col));
  }
  return DataTable(std::move(vars), std::move(cols));
}

}  // namespace beliefnet
