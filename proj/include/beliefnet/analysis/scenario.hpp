#pragma once

#include <string>
#include <vector>

#include "beliefnet/core/network.hpp"
#include "beliefnet/infer/elimination.hpp"

namespace beliefnet {

/// A named evidence profile. Empty evidence is the baseline.
struct ScenarioDef {
  std::string name;
  Evidence evidence;
};

struct ScenarioRow {
  std::string scenario;
  double evidence_probability = 1.0;
  std::vector<QueryResult> posteriors;  // one per target, in target order
};

/// Posterior of each target under each scenario, rows in scenario order.
/// Throws InvalidArgument when a scenario observes one of the targets or
/// names are repeated, and ZeroProbabilityEvidence naming the scenario.
std::vector<ScenarioRow> scenario_posteriors(const FittedNetwork& net,
                                             const std::vector<ScenarioDef>& scenarios,
                                             const std::vector<std::string>& targets,
                                             int workers = 1);

}  // namespace beliefnet
