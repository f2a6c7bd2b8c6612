#include "beliefnet/analysis/scenario.hpp"

#include <set>

#include "beliefnet/core/error.hpp"
#include "beliefnet/util/parallel.hpp"

namespace beliefnet {

std::vector<ScenarioRow> scenario_posteriors(const FittedNetwork& net,
                                             const std::vector<ScenarioDef>& scenarios,
                                             const std::vector<std::string>& targets,
                                             int workers) {
  std::set<std::string> names;
  for (const auto& s : scenarios) {
    if (!names.insert(s.name).second) {
      throw Error(ErrorKind::InvalidArgument, "scenario '" + s.name + "' defined twice");
    }
    resolve_evidence(net, s.evidence);
    for (const auto& t : targets) {
      net.index_of(t);
      if (s.evidence.contains(t)) {
        throw Error(ErrorKind::InvalidArgument,
                    "scenario '" + s.name + "' observes target '" + t + "'");
      }
    }
  }

  std::vector<ScenarioRow> rows(scenarios.size());
  parallel_for(scenarios.size(), workers, [&](std::size_t i) {
    const auto& s = scenarios[i];
    ScenarioRow row{s.name, 1.0, {}};
    try {
      for (const auto& t : targets) row.posteriors.push_back(posterior(net, t, s.evidence));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ZeroProbabilityEvidence) throw;
      throw Error(ErrorKind::ZeroProbabilityEvidence,
                  "scenario '" + s.name + "' has evidence probability below 1e-300");
    }
    if (!row.posteriors.empty()) {
      row.evidence_probability = row.posteriors.front().evidence_probability;
    } else if (!s.evidence.empty()) {
      // No targets: still report P(e) for the scenario.
      const auto first = s.evidence.assignments().begin()->first;
      Evidence rest;
      for (const auto& [k, v] : s.evidence.assignments()) {
        if (k != first) rest.set(k, v);
      }
      const auto q = posterior(net, first, rest);
      const int state = net.variable(net.index_of(first)).level_index(
          s.evidence.assignments().begin()->second);
      row.evidence_probability = q.evidence_probability * q.distribution[state];
    }
    rows[i] = std::move(row);
  });
  return rows;
}

}  // namespace beliefnet
