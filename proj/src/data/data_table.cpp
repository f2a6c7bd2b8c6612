#include "beliefnet/data/data_table.hpp"

#include <algorithm>

#include "beliefnet/core/error.hpp"
#include "beliefnet/data/csv.hpp"
#include "json.hpp"

namespace beliefnet {

DataTable::DataTable(std::vector<Variable> variables,
                     std::vector<std::vector<int>> columns)
    : variables_(std::move(variables)), columns_(std::move(columns)) {
  check_unique_names(variables_);
  if (variables_.size() != columns_.size()) {
    throw Error(ErrorKind::InvalidArgument, "one column per variable required");
  }
  rows_ = columns_.empty() ? 0 : columns_.front().size();
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (columns_[c].size() != rows_) {
      throw Error(ErrorKind::InvalidArgument,
                  "column '" + variables_[c].name() + "' has a different length");
    }
    const int r = variables_[c].cardinality();
    for (int v : columns_[c]) {
      if (v != kMissing && (v < 0 || v >= r)) {
        throw Error(ErrorKind::InvalidArgument,
                    "column '" + variables_[c].name() + "' has index " +
                        std::to_string(v) + " outside its domain");
      }
    }
  }
}

std::optional<int> DataTable::find(std::string_view name) const {
  return find_variable(variables_, name);
}

int DataTable::index_of(std::string_view name) const {
  if (auto c = find(name)) return *c;
  throw Error(ErrorKind::UnknownVariable,
              "no variable '" + std::string(name) + "' in data table");
}

DataTable DataTable::select_rows(std::span<const std::size_t> rows) const {
  std::vector<std::vector<int>> cols(columns_.size());
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    cols[c].reserve(rows.size());
    for (std::size_t r : rows) cols[c].push_back(columns_[c].at(r));
  }
  DataTable out;
  out.variables_ = variables_;
  out.columns_ = std::move(cols);
  out.rows_ = rows.size();
  return out;
}

DataTable DataTable::select_columns(const std::vector<std::string>& names) const {
  std::vector<Variable> vars;
  std::vector<std::vector<int>> cols;
  for (const auto& name : names) {
    const int c = index_of(name);
    vars.push_back(variables_[c]);
    cols.push_back(columns_[c]);
  }
  DataTable out(std::move(vars), std::move(cols));
  out.rows_ = rows_;
  return out;
}

DataTable DataTable::drop_columns(const std::vector<std::string>& names) const {
  std::vector<std::string> keep;
  for (const auto& v : variables_) {
    if (std::find(names.begin(), names.end(), v.name()) == names.end()) {
      keep.push_back(v.name());
    }
  }
  return select_columns(keep);
}

DataTable DataTable::with_column(Variable variable, std::vector<int> column) const {
  auto vars = variables_;
  auto cols = columns_;
  vars.push_back(std::move(variable));
  cols.push_back(std::move(column));
  if (variables_.empty()) return DataTable(std::move(vars), std::move(cols));
  if (cols.back().size() != rows_) {
    throw Error(ErrorKind::InvalidArgument, "new column has a different length");
  }
  return DataTable(std::move(vars), std::move(cols));
}

DataTable DataTable::with_replaced_column(int c, Variable variable,
                                          std::vector<int> column) const {
  auto vars = variables_;
  auto cols = columns_;
  vars.at(c) = std::move(variable);
  cols.at(c) = std::move(column);
  DataTable out(std::move(vars), std::move(cols));
  out.rows_ = rows_;
  return out;
}

std::size_t DataTable::complete_rows() const {
  std::size_t n = 0;
  for (std::size_t r = 0; r < rows_; ++r) {
    bool complete = true;
    for (const auto& col : columns_) {
      if (col[r] == kMissing) {
        complete = false;
        break;
      }
    }
    n += complete;
  }
  return n;
}

std::string data_table_csv(const DataTable& table) {
  std::string text;
  csv::Record header;
  for (const auto& v : table.variables()) header.push_back(v.name());
  text += csv::join(header) + "\n";
  csv::Record record(table.cols());
  for (std::size_t r = 0; r < table.rows(); ++r) {
    for (std::size_t c = 0; c < table.cols(); ++c) {
      const int v = table.value(r, static_cast<int>(c));
      record[c] = v == kMissing ? "" : table.variable(static_cast<int>(c)).level(v);
    }
    text += csv::join(record) + "\n";
  }
  return text;
}

std::string data_dictionary_json(const std::vector<Variable>& variables) {
  nlohmann::ordered_json doc;
  doc["format"] = "beliefnet-dictionary";
  doc["version"] = 1;
  auto vars = nlohmann::ordered_json::array();
  for (const auto& v : variables) {
    vars.push_back(
        {{"name", v.name()}, {"levels", v.levels()}, {"ordinal", v.ordinal()}});
  }
  doc["variables"] = std::move(vars);
  return doc.dump(2) + "\n";
}

std::vector<Variable> parse_data_dictionary(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text.begin(), json_text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::MalformedFile, e.what(), e.byte);
  }
  std::vector<Variable> out;
  try {
    for (const auto& v : doc.at("variables")) {
      out.emplace_back(v.at("name").get<std::string>(),
                       v.at("levels").get<std::vector<std::string>>(),
                       v.value("ordinal", false));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedFile, std::string("dictionary: ") + e.what());
  }
  return out;
}

DataTable parse_data_table(std::string_view csv_text,
                           const std::vector<Variable>& dictionary) {
  auto records = csv::parse(csv_text);
  if (records.empty()) throw Error(ErrorKind::MalformedFile, "empty data file");
  const auto& header = records.front();
  std::vector<Variable> vars;
  for (const auto& name : header) {
    auto v = find_variable(dictionary, name);
    if (!v) {
      throw Error(ErrorKind::MissingColumn,
                  "column '" + name + "' is not in the dictionary");
    }
    vars.push_back(dictionary[*v]);
  }
  std::vector<std::vector<int>> cols(vars.size());
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != header.size()) {
      throw Error(ErrorKind::RaggedRow, "data row " + std::to_string(r), r);
    }
    for (std::size_t c = 0; c < vars.size(); ++c) {
      const auto& cell = records[r][c];
      cols[c].push_back(cell.empty() ? kMissing : vars[c].level_index(cell));
    }
  }
  return DataTable(std::move(vars), std::move(cols));
}

void save_data_table(const DataTable& table, const std::filesystem::path& csv_path,
                     const std::filesystem::path& dictionary_path) {
  csv::write_file(csv_path, data_table_csv(table));
  csv::write_file(dictionary_path, data_dictionary_json(table.variables()));
}

DataTable load_data_table(const std::filesystem::path& csv_path,
                          const std::filesystem::path& dictionary_path) {
  return parse_data_table(csv::read_file(csv_path),
                          parse_data_dictionary(csv::read_file(dictionary_path)));
}

}  // namespace beliefnet
