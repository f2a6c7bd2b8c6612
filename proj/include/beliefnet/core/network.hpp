#pragma once

#include <Eigen/Dense>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "beliefnet/core/dag.hpp"
#include "beliefnet/core/variable.hpp"

namespace beliefnet {

/// Rows index parent configurations, columns index the node's states.
using ProbabilityMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Mixed-radix index of a parent configuration; the LAST parent varies
/// fastest. `states[i]` is the state of the i-th parent and `cards[i]` its
/// cardinality. The same convention indexes CPT rows and count tables.
int configuration_index(std::span<const int> states, std::span<const int> cards);
// Inverse of configuration_index.
std::vector<int> configuration_states(int index, std::span<const int> cards);
int configuration_count(std::span<const int> cards);

/// Conditional probability table of one node.
struct Cpt {
  int node = 0;
  std::vector<int> parents;
  std::vector<int> parent_cards;
  ProbabilityMatrix table;

  int rows() const { return static_cast<int>(table.rows()); }
  int states() const { return static_cast<int>(table.cols()); }
};

using Metadata = std::map<std::string, std::string>;

/// Row-sum tolerance enforced on every CPT.
inline constexpr double kRowSumTolerance = 1e-12;

/// Variables, structure and parameters of a discrete Bayesian network.
///
/// Immutable after construction. Node i of the DAG is variable i; the parent
/// order of each CPT is the DAG's parent order for that node.
class FittedNetwork {
 public:
  // `tables[i]` must have one row per configuration of dag.parents(i) and one
  // column per state of variables[i]. Throws InvalidArgument or CycleDetected.
  FittedNetwork(std::vector<Variable> variables, Dag dag,
                std::vector<ProbabilityMatrix> tables, Metadata metadata = {});

  std::size_t size() const noexcept { return variables_.size(); }
  const std::vector<Variable>& variables() const noexcept { return variables_; }
  const Variable& variable(int i) const { return variables_.at(i); }
  const Dag& dag() const noexcept { return dag_; }
  const Cpt& cpt(int i) const { return cpts_.at(i); }
  const std::vector<Cpt>& cpts() const noexcept { return cpts_; }
  const Metadata& metadata() const noexcept { return metadata_; }
  const std::vector<int>& topological() const noexcept { return order_; }

  int index_of(std::string_view name) const { return dag_.index_of(name); }

  // Copy with one CPT replaced (validated like the constructor).
  FittedNetwork with_table(int node, ProbabilityMatrix table) const;
  FittedNetwork with_metadata(Metadata metadata) const;

 private:
  std::vector<Variable> variables_;
  Dag dag_;
  std::vector<Cpt> cpts_;
  Metadata metadata_;
  std::vector<int> order_;
};

/// Observed states keyed by variable name.
class Evidence {
 public:
  Evidence() = default;
  Evidence(std::initializer_list<std::pair<const std::string, std::string>> init)
      : assignments_(init) {}

  // Throws InvalidArgument when the variable is already assigned.
  Evidence& set(std::string variable, std::string level);
  bool contains(std::string_view variable) const;
  bool empty() const noexcept { return assignments_.empty(); }
  std::size_t size() const noexcept { return assignments_.size(); }
  const std::map<std::string, std::string>& assignments() const noexcept {
    return assignments_;
  }

  friend bool operator==(const Evidence&, const Evidence&) = default;

 private:
  std::map<std::string, std::string> assignments_;
};

inline constexpr int kUnobserved = -1;

// One entry per network variable: the observed state or kUnobserved.
// Throws UnknownVariable / UnknownLevel.
std::vector<int> resolve_evidence(const FittedNetwork& net,
                                  const Evidence& evidence);

/// Product of the CPT entries selected by a full assignment.
double joint_probability(const FittedNetwork& net, std::span<const int> states);
// Throws IncompleteAssignment / UnknownVariable / UnknownLevel.
double joint_probability(const FittedNetwork& net, const Evidence& assignment);

/// Number of free parameters, sum over nodes of q_i * (r_i - 1). Variables
/// are matched to DAG nodes by name.
long parameter_count(const Dag& dag, const std::vector<Variable>& variables);

}  // namespace beliefnet
