#pragma once

#include <string>
#include <vector>

#include "beliefnet/core/dag.hpp"
#include "beliefnet/learn/bootstrap.hpp"
#include "beliefnet/learn/constraints.hpp"

namespace beliefnet {

/// L1 distance between the empirical CDF of `strengths` and the two-point
/// CDF that puts mass p at 1 and 1 - p at 0, integrated over [0, 1].
double threshold_objective(const std::vector<double>& strengths, double p);

/// Significance threshold for bootstrap strengths.
///
/// Every distinct positive strength u is a candidate (arcs with strength >= u
/// significant), as is "nothing significant" (t = 1) when no strength reaches
/// 1. The candidate minimizing threshold_objective wins; ties go to the
/// smaller t. The returned t is the smallest significant strength, so the
/// same partition results from any t in (largest rejected strength, t].
/// Throws EmptyStrengths when no strength is positive.
double optimal_threshold(const std::vector<double>& pair_strengths);
double optimal_threshold(const ArcStrengthTable& strengths);

struct SkippedEdge {
  std::string from;
  std::string to;
  double strength = 0.0;
  std::string reason;  // "cycle" or "blacklist"
};

struct AveragedNetwork {
  Dag dag;
  double threshold = 0.0;
  std::vector<SkippedEdge> skipped;
};

/// Consensus DAG: whitelisted arcs first, then every pair with strength >= t
/// in decreasing strength order (ties by node index), oriented by the
/// majority direction (a -> b for a < b on an exact 0.5 split). Insertions
/// that would close a cycle or use a blacklisted arc are skipped and listed.
AveragedNetwork averaged_network(const ArcStrengthTable& strengths, double threshold,
                                 const Constraints& constraints = {});

}  // namespace beliefnet
