#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "beliefnet/core/network.hpp"

namespace beliefnet {

/// First-order Sobol indices of a categorical target for one input.
///
/// The target is split into state indicators Y_k = 1[Y = k]. For each k,
///   per_state[k] = Var_X(E[Y_k | X]) / Var(Y_k),  Var(Y_k) = p_k (1 - p_k),
/// with E[Y_k | X = x] the exact posterior given X = x. The aggregate is
///   sum_k Var_X(E[Y_k | X]) / sum_k Var(Y_k).
/// States with Var(Y_k) = 0 contribute 0 to both sums and report 0.
struct SobolResult {
  std::string target;
  std::string input;
  Eigen::VectorXd per_state;
  double aggregate = 0.0;
};

/// Exact first-order index from the joint posterior of (input, target).
/// Inputs d-separated from the target (no evidence) get exact zeros.
/// Throws DegenerateTarget when every target state has zero variance and
/// InvalidArgument when input == target.
SobolResult sobol_first_order(const FittedNetwork& net, const std::string& target,
                              const std::string& input);

/// Aggregate indices in percent; rows are inputs, columns targets.
/// Cells where the input is the target hold NaN (shown as "--"). Rows are
/// sorted by the first target column, descending (NaN last, ties by name).
struct SobolMatrix {
  std::vector<std::string> inputs;
  std::vector<std::string> targets;
  Eigen::MatrixXd percent;
};

// `inputs` empty means every variable. Cells are computed on `workers` threads.
SobolMatrix sobol_matrix(const FittedNetwork& net, const std::vector<std::string>& targets,
                         std::vector<std::string> inputs = {}, int workers = 1);

}  // namespace beliefnet
