#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "beliefnet/core/variable.hpp"

namespace beliefnet {

inline constexpr int kMissing = -1;

/// Encoded observations: one column of level indices per variable, with
/// kMissing marking missing cells. Stored column-major.
class DataTable {
 public:
  DataTable() = default;
  // Throws InvalidArgument on ragged columns or out-of-range indices.
  DataTable(std::vector<Variable> variables, std::vector<std::vector<int>> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return variables_.size(); }
  const std::vector<Variable>& variables() const noexcept { return variables_; }
  const Variable& variable(int c) const { return variables_.at(c); }
  std::span<const int> column(int c) const { return columns_.at(c); }
  int value(std::size_t row, int c) const { return columns_.at(c).at(row); }
  bool is_missing(std::size_t row, int c) const { return value(row, c) == kMissing; }

  std::optional<int> find(std::string_view name) const;
  // Throws UnknownVariable.
  int index_of(std::string_view name) const;

  // Rows in the given order (indices may repeat).
  DataTable select_rows(std::span<const std::size_t> rows) const;
  // Columns by name, in the given order.
  DataTable select_columns(const std::vector<std::string>& names) const;
  DataTable drop_columns(const std::vector<std::string>& names) const;
  DataTable with_column(Variable variable, std::vector<int> column) const;
  DataTable with_replaced_column(int c, Variable variable,
                                 std::vector<int> column) const;

  // Rows with no missing cell.
  std::size_t complete_rows() const;

  friend bool operator==(const DataTable&, const DataTable&) = default;

 private:
  std::vector<Variable> variables_;
  std::vector<std::vector<int>> columns_;
  std::size_t rows_ = 0;
};

/// Encoded table on disk: CSV of level labels (empty cell = missing) plus a
/// JSON variable dictionary listing names, level order and ordinal flags.
std::string data_table_csv(const DataTable& table);
std::string data_dictionary_json(const std::vector<Variable>& variables);
std::vector<Variable> parse_data_dictionary(std::string_view json_text);
DataTable parse_data_table(std::string_view csv_text,
                           const std::vector<Variable>& dictionary);

void save_data_table(const DataTable& table, const std::filesystem::path& csv_path,
                     const std::filesystem::path& dictionary_path);
DataTable load_data_table(const std::filesystem::path& csv_path,
                          const std::filesystem::path& dictionary_path);

}  // namespace beliefnet
