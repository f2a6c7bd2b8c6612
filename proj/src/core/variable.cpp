#include "beliefnet/core/variable.hpp"

#include <set>

#include "beliefnet/core/error.hpp"

namespace beliefnet {

Variable::Variable(std::string name, std::vector<std::string> levels,
                   bool ordinal)
    : name_(std::move(name)), levels_(std::move(levels)), ordinal_(ordinal) {
  if (name_.empty()) {
    throw Error(ErrorKind::InvalidArgument, "variable name is empty");
  }
  if (levels_.size() < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "variable '" + name_ + "' needs at least two levels");
  }
  std::set<std::string_view> seen;
  for (const auto& label : levels_) {
    if (label.empty()) {
      throw Error(ErrorKind::InvalidArgument,
                  "empty level label in variable '" + name_ + "'");
    }
    if (!seen.insert(label).second) {
      throw Error(ErrorKind::InvalidArgument,
                  "duplicate level '" + label + "' in variable '" + name_ + "'");
    }
  }
}

std::optional<int> Variable::find_level(std::string_view label) const {
  for (int k = 0; k < cardinality(); ++k) {
    if (levels_[k] == label) return k;
  }
  return std::nullopt;
}

int Variable::level_index(std::string_view label) const {
  if (auto k = find_level(label)) return *k;
  throw Error(ErrorKind::UnknownLevel, "variable '" + name_ +
                                           "' has no level '" +
                                           std::string(label) + "'");
}

void check_unique_names(const std::vector<Variable>& variables) {
  std::set<std::string_view> seen;
  for (const auto& v : variables) {
    if (!seen.insert(v.name()).second) {
      throw Error(ErrorKind::InvalidArgument,
                  "duplicate variable name '" + v.name() + "'");
    }
  }
}

std::optional<int> find_variable(const std::vector<Variable>& variables,
                                 std::string_view name) {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i].name() == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

}  // namespace beliefnet
