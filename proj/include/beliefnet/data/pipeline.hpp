#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "beliefnet/data/data_table.hpp"
#include "beliefnet/data/raw_table.hpp"

namespace beliefnet {

enum class UnmappedPolicy { Strict, Missing };

/// How one raw column becomes one categorical variable.
///
/// A token is looked up in `mapping` first (a nullopt value means MISSING),
/// then in `missing_tokens`, then matched against the level labels
/// themselves. Anything else is unmapped.
struct VariableRecode {
  std::string name;
  std::string column;  // raw column; defaults to `name`
  std::vector<std::string> levels;
  std::map<std::string, std::optional<std::string>> mapping;
  std::vector<std::string> missing_tokens;
  bool ordinal = false;
  bool collapse_rare = true;
  UnmappedPolicy unmapped = UnmappedPolicy::Strict;
};

struct RecodeSpec {
  std::vector<VariableRecode> variables;
  int min_count = 50;

  std::vector<std::string> raw_columns() const;
};

/// A theme column built from binary indicator columns.
struct ThemeSpec {
  std::string name;
  std::vector<std::string> members;
  std::string population;  // "risk", "opportunity" or empty
};

inline constexpr const char* kMentioned = "Mentioned";
inline constexpr const char* kNotMentioned = "Not mentioned";

/// Levels of the framing variable used to split the sample.
struct FramingLevels {
  std::string variable = "DevelopAI";
  std::string risk = "Risk";
  std::string opportunity = "Opportunity";
  std::string both = "Both";
};

// Throws MissingColumn or UnmappedToken (strict policy).
DataTable recode(const RawTable& raw, const RecodeSpec& spec);

/// Levels observed fewer than `min_count` times leave the domain and their
/// cells become missing. Counts are taken on the table as given.
/// Throws InvalidArgument if fewer than two levels would remain.
DataTable collapse_rare(const DataTable& table, const std::string& variable,
                        int min_count = 50);

// Rows without a missing cell among `variables`, in order.
DataTable drop_incomplete(const DataTable& table,
                          const std::vector<std::string>& variables);

/// One binary theme column per theme: Mentioned iff any member is Mentioned;
/// Not mentioned iff every member is observed and Not mentioned; missing
/// otherwise. Member columns are dropped. Throws NonBinaryMember or
/// UnknownVariable.
DataTable group_themes(const DataTable& table, const std::vector<ThemeSpec>& specs);

/// (risk, opportunity): rows framed Risk or Both, rows framed Opportunity or
/// Both. Rows with a missing framing value go to neither. Throws UnknownLevel.
std::pair<DataTable, DataTable> split_population(const DataTable& table,
                                                 const FramingLevels& framing = {});

}  // namespace beliefnet
