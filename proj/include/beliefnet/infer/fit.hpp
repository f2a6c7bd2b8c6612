#pragma once

#include <string>
#include <vector>

#include "beliefnet/core/dag.hpp"
#include "beliefnet/core/network.hpp"
#include "beliefnet/data/counts.hpp"
#include "beliefnet/data/data_table.hpp"

namespace beliefnet {

/// Posterior-mean CPT row: (N_ijk + alpha) / (N_ij + r * alpha).
ProbabilityMatrix bayes_table(const CountTable& counts, double alpha);

/// Maximum-likelihood CPT row N_ijk / N_ij; rows with N_ij = 0 become uniform
/// and their indices are appended to `unseen_rows`.
ProbabilityMatrix mle_table(const CountTable& counts, std::vector<int>* unseen_rows = nullptr);

/// Dirichlet-smoothed parameters for `dag` from `data` (alpha > 0).
/// DAG nodes are matched to data columns by name; the network's variables
/// are in DAG node order. Rows with missing cells in a family are skipped
/// for that family. Throws InvalidArgument for alpha <= 0.
FittedNetwork fit_bayes(const Dag& dag, const DataTable& data, double alpha = 1.0,
                        Metadata metadata = {});

/// Maximum-likelihood parameters. Unseen parent configurations fall back to
/// uniform with a warning (one per affected CPT).
FittedNetwork fit_mle(const Dag& dag, const DataTable& data, Metadata metadata = {});

}  // namespace beliefnet
