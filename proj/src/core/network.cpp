#include "beliefnet/core/network.hpp"

#include <cmath>

#include "beliefnet/core/error.hpp"

namespace beliefnet {

int configuration_index(std::span<const int> states,
                        std::span<const int> cards) {
  int index = 0;
  for (std::size_t i = 0; i < cards.size(); ++i) {
    index = index * cards[i] + states[i];
  }
  return index;
}

std::vector<int> configuration_states(int index, std::span<const int> cards) {
  std::vector<int> states(cards.size());
  for (std::size_t i = cards.size(); i-- > 0;) {
    states[i] = index % cards[i];
    index /= cards[i];
  }
  return states;
}

int configuration_count(std::span<const int> cards) {
  int q = 1;
  for (int c : cards) q *= c;
  return q;
}

namespace {

void validate_table(const FittedNetwork& net, const Cpt& cpt) {
  const auto& var = net.variable(cpt.node);
  const int q = configuration_count(cpt.parent_cards);
  if (cpt.table.rows() != q || cpt.table.cols() != var.cardinality()) {
    throw Error(ErrorKind::InvalidArgument,
                "CPT of '" + var.name() + "' has shape " +
                    std::to_string(cpt.table.rows()) + "x" +
                    std::to_string(cpt.table.cols()) + ", expected " +
                    std::to_string(q) + "x" +
                    std::to_string(var.cardinality()));
  }
  for (int j = 0; j < q; ++j) {
    auto row = cpt.table.row(j);
    if (!row.allFinite() || (row.array() < 0.0).any() ||
        (row.array() > 1.0).any()) {
      throw Error(ErrorKind::InvalidArgument,
                  "CPT of '" + var.name() + "' row " + std::to_string(j) +
                      " has entries outside [0,1]");
    }
    if (std::abs(row.sum() - 1.0) > kRowSumTolerance) {
      throw Error(ErrorKind::InvalidArgument,
                  "CPT of '" + var.name() + "' row " + std::to_string(j) +
                      " does not sum to 1");
    }
  }
}

}  // namespace

FittedNetwork::FittedNetwork(std::vector<Variable> variables, Dag dag,
                             std::vector<ProbabilityMatrix> tables,
                             Metadata metadata)
    : variables_(std::move(variables)),
      dag_(std::move(dag)),
      metadata_(std::move(metadata)) {
  check_unique_names(variables_);
  if (dag_.size() != variables_.size() || tables.size() != variables_.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "network needs one DAG node and one CPT per variable");
  }
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (dag_.name(static_cast<int>(i)) != variables_[i].name()) {
      throw Error(ErrorKind::InvalidArgument,
                  "DAG node " + std::to_string(i) + " is '" +
                      dag_.name(static_cast<int>(i)) + "' but variable is '" +
                      variables_[i].name() + "'");
    }
  }
  order_ = topological_indices(dag_);
  cpts_.reserve(variables_.size());
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    Cpt cpt;
    cpt.node = static_cast<int>(i);
    cpt.parents = dag_.parents(static_cast<int>(i));
    for (int p : cpt.parents) {
      cpt.parent_cards.push_back(variables_[p].cardinality());
    }
    cpt.table = std::move(tables[i]);
    cpts_.push_back(std::move(cpt));
    validate_table(*this, cpts_.back());
  }
}

FittedNetwork FittedNetwork::with_table(int node, ProbabilityMatrix table) const {
  FittedNetwork copy = *this;
  copy.cpts_.at(node).table = std::move(table);
  validate_table(copy, copy.cpts_[node]);
  return copy;
}

FittedNetwork FittedNetwork::with_metadata(Metadata metadata) const {
  FittedNetwork copy = *this;
  copy.metadata_ = std::move(metadata);
  return copy;
}

Evidence& Evidence::set(std::string variable, std::string level) {
  if (assignments_.contains(variable)) {
    throw Error(ErrorKind::InvalidArgument,
                "evidence already assigns '" + variable + "'");
  }
  assignments_.emplace(std::move(variable), std::move(level));
  return *this;
}

bool Evidence::contains(std::string_view variable) const {
  return assignments_.contains(std::string(variable));
}

std::vector<int> resolve_evidence(const FittedNetwork& net,
                                  const Evidence& evidence) {
  std::vector<int> states(net.size(), kUnobserved);
  for (const auto& [name, level] : evidence.assignments()) {
    const int v = net.index_of(name);
    states[v] = net.variable(v).level_index(level);
  }
  return states;
}

double joint_probability(const FittedNetwork& net,
                         std::span<const int> states) {
  if (states.size() != net.size()) {
    throw Error(ErrorKind::IncompleteAssignment,
                "assignment size does not match network");
  }
  double p = 1.0;
  std::vector<int> parent_states;
  for (const auto& cpt : net.cpts()) {
    parent_states.clear();
    for (int pa : cpt.parents) parent_states.push_back(states[pa]);
    const int j = configuration_index(parent_states, cpt.parent_cards);
    p *= cpt.table(j, states[cpt.node]);
  }
  return p;
}

double joint_probability(const FittedNetwork& net, const Evidence& assignment) {
  auto states = resolve_evidence(net, assignment);
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i] == kUnobserved) {
      throw Error(ErrorKind::IncompleteAssignment,
                  "no state given for '" + net.variable(static_cast<int>(i)).name() +
                      "'");
    }
  }
  return joint_probability(net, std::span<const int>(states));
}

long parameter_count(const Dag& dag, const std::vector<Variable>& variables) {
  auto card = [&](int node) {
    auto v = find_variable(variables, dag.name(node));
    if (!v) {
      throw Error(ErrorKind::UnknownVariable,
                  "no variable for node '" + dag.name(node) + "'");
    }
    return static_cast<long>(variables[*v].cardinality());
  };
  long d = 0;
  for (std::size_t i = 0; i < dag.size(); ++i) {
    long q = 1;
    for (int p : dag.parents(static_cast<int>(i))) q *= card(p);
    d += q * (card(static_cast<int>(i)) - 1);
  }
  return d;
}

}  // namespace beliefnet
