#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "beliefnet/core/network.hpp"
#include "beliefnet/infer/factor.hpp"

namespace beliefnet {

/// P(evidence) below this is reported as ZeroProbabilityEvidence.
inline constexpr double kZeroEvidenceThreshold = 1e-300;

struct QueryResult {
  std::string target;
  std::vector<std::string> levels;
  Eigen::VectorXd distribution;
  Evidence evidence;
  double evidence_probability = 1.0;
  double log_evidence_probability = 0.0;
  std::vector<std::string> elimination_order;
};

/// Normalized joint posterior over query variables.
struct JointQuery {
  Factor joint;  // scope = query variables in the requested order, sums to 1
  double log_evidence_probability = 0.0;
  std::vector<int> elimination_order;
};

/// Exact variable elimination.
///
/// Nodes that are neither queried, observed nor ancestors of either are
/// dropped first. The rest are eliminated in min-fill order (ties by node
/// index) unless `order` is given, in which case the variables to eliminate
/// are taken in the order they appear there and every one of them must be
/// listed. Intermediate factors are rescaled by their maximum to avoid
/// underflow. Throws ZeroProbabilityEvidence, UnknownVariable, UnknownLevel,
/// InvalidArgument (query variable observed).
JointQuery joint_posterior(const FittedNetwork& net, const std::vector<int>& query,
                           const std::vector<int>& evidence_states,
                           const std::optional<std::vector<int>>& order = std::nullopt);

QueryResult posterior(const FittedNetwork& net, std::string_view target,
                      const Evidence& evidence = {});
QueryResult posterior(const FittedNetwork& net, std::string_view target,
                      const Evidence& evidence,
                      const std::vector<std::string>& elimination_order);

/// Marginal of `target` followed by one posterior per level of `sweep`
/// (single-variable evidence), in level order. A sweep level with zero
/// probability propagates ZeroProbabilityEvidence.
std::vector<QueryResult> conditional_table(const FittedNetwork& net,
                                           std::string_view target,
                                           std::string_view sweep);

}  // namespace beliefnet
