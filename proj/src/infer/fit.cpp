#include "beliefnet/infer/fit.hpp"

#include "beliefnet/core/error.hpp"
#include "beliefnet/util/log.hpp"

namespace beliefnet {

ProbabilityMatrix bayes_table(const CountTable& counts, double alpha) {
  const int q = counts.configurations();
  const int r = counts.states();
  ProbabilityMatrix table(q, r);
  for (int j = 0; j < q; ++j) {
    const double nij = static_cast<double>(counts.counts.row(j).sum());
    const double denom = nij + r * alpha;
    for (int k = 0; k < r; ++k) {
      table(j, k) = (static_cast<double>(counts.counts(j, k)) + alpha) / denom;
    }
  }
  return table;
}

ProbabilityMatrix mle_table(const CountTable& counts, std::vector<int>* unseen_rows) {
  const int q = counts.configurations();
  const int r = counts.states();
  ProbabilityMatrix table(q, r);
  for (int j = 0; j < q; ++j) {
    const std::int64_t nij = counts.counts.row(j).sum();
    if (nij == 0) {
      table.row(j).setConstant(1.0 / r);
      if (unseen_rows) unseen_rows->push_back(j);
      continue;
    }
    for (int k = 0; k < r; ++k) {
      table(j, k) = static_cast<double>(counts.counts(j, k)) / static_cast<double>(nij);
    }
  }
  return table;
}

namespace {

template <typename TableFn>
FittedNetwork fit_with(const Dag& dag, const DataTable& data, Metadata metadata,
                       TableFn&& make_table) {
  std::vector<Variable> variables;
  std::vector<int> column;
  for (const auto& name : dag.nodes()) {
    const int c = data.index_of(name);
    column.push_back(c);
    variables.push_back(data.variable(c));
  }
  std::vector<ProbabilityMatrix> tables;
  for (std::size_t i = 0; i < dag.size(); ++i) {
    std::vector<int> parents;
    for (int p : dag.parents(static_cast<int>(i))) parents.push_back(column[p]);
    tables.push_back(make_table(static_cast<int>(i), counts(data, column[i], parents)));
  }
  return FittedNetwork(std::move(variables), dag, std::move(tables), std::move(metadata));
}

}  // namespace

FittedNetwork fit_bayes(const Dag& dag, const DataTable& data, double alpha,
                        Metadata metadata) {
  if (!(alpha > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "Dirichlet alpha must be positive");
  }
  return fit_with(dag, data, std::move(metadata),
                  [&](int, const CountTable& c) { return bayes_table(c, alpha); });
}

FittedNetwork fit_mle(const Dag& dag, const DataTable& data, Metadata metadata) {
  return fit_with(dag, data, std::move(metadata), [&](int node, const CountTable& c) {
    std::vector<int> unseen;
    auto table = mle_table(c, &unseen);
    if (!unseen.empty()) {
      log::warn("MLE for '" + dag.name(node) + "': " + std::to_string(unseen.size()) +
                " unseen parent configuration(s) set to uniform");
    }
    return table;
  });
}

}  // namespace beliefnet
