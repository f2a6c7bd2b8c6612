#include "beliefnet/data/raw_table.hpp"

#include <set>

#include "beliefnet/core/error.hpp"
#include "beliefnet/data/csv.hpp"
#include "beliefnet/util/format.hpp"

namespace beliefnet {

std::optional<int> RawTable::find_column(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

RawTable parse_raw_table(std::string_view text,
                         const std::vector<std::string>& required_columns) {
  auto records = csv::parse(text);
  if (records.empty()) {
    throw Error(ErrorKind::MalformedFile, "CSV has no header row");
  }
  RawTable table;
  table.columns = std::move(records.front());
  std::set<std::string> seen;
  for (const auto& c : table.columns) {
    if (!seen.insert(c).second) {
      throw Error(ErrorKind::MalformedFile, "duplicate column '" + c + "'");
    }
  }
  for (const auto& name : required_columns) {
    if (!seen.contains(name)) {
      throw Error(ErrorKind::MissingColumn, "column '" + name + "' not found");
    }
  }
  table.rows.reserve(records.size() - 1);
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != table.columns.size()) {
      throw Error(ErrorKind::RaggedRow,
                  "data row " + std::to_string(r) + " has " +
                      std::to_string(records[r].size()) + " cells, expected " +
                      std::to_string(table.columns.size()),
                  r);
    }
    table.rows.push_back(std::move(records[r]));
  }
  table.fingerprint = {fnv1a_hex(text), table.rows.size()};
  return table;
}

RawTable load_csv(const std::filesystem::path& path,
                  const std::vector<std::string>& required_columns) {
  return parse_raw_table(csv::read_file(path), required_columns);
}

}  // namespace beliefnet
