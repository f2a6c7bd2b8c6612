#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace beliefnet {

/// A named categorical variable with an ordered set of level labels.
///
/// Level order is the order of the constructor argument and fixes the state
/// index used everywhere else (CPT columns, data cells, factor entries).
/// `ordinal` is carried as metadata only; no computation looks at it.
class Variable {
 public:
  Variable(std::string name, std::vector<std::string> levels,
           bool ordinal = false);

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& levels() const noexcept { return levels_; }
  const std::string& level(int state) const { return levels_.at(state); }
  int cardinality() const noexcept { return static_cast<int>(levels_.size()); }
  bool ordinal() const noexcept { return ordinal_; }

  std::optional<int> find_level(std::string_view label) const;
  // Throws UnknownLevel.
  int level_index(std::string_view label) const;

  friend bool operator==(const Variable&, const Variable&) = default;

 private:
  std::string name_;
  std::vector<std::string> levels_;
  bool ordinal_ = false;
};

// Checks that names are unique; throws InvalidArgument otherwise.
void check_unique_names(const std::vector<Variable>& variables);

std::optional<int> find_variable(const std::vector<Variable>& variables,
                                 std::string_view name);

}  // namespace beliefnet
