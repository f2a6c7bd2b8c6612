#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace beliefnet {

struct Fingerprint {
  std::string hash;  // FNV-1a of the file bytes
  std::size_t rows = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// Survey table as read from disk: header plus verbatim string cells.
struct RawTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  Fingerprint fingerprint;

  std::optional<int> find_column(std::string_view name) const;
};

/// Reads a CSV with a header row. Every name in `required_columns` must be
/// present. Throws Io, RaggedRow (index() = 1-based data row number) or
/// MissingColumn.
RawTable load_csv(const std::filesystem::path& path,
                  const std::vector<std::string>& required_columns = {});

RawTable parse_raw_table(std::string_view text,
                         const std::vector<std::string>& required_columns = {});

}  // namespace beliefnet
