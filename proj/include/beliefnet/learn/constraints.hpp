#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "beliefnet/core/dag.hpp"
#include "beliefnet/core/tiers.hpp"
#include "beliefnet/core/variable.hpp"

namespace beliefnet {

using NamedArc = std::pair<std::string, std::string>;

/// Forbidden and required directed arcs, by variable name.
struct Constraints {
  std::set<NamedArc> blacklist;
  std::set<NamedArc> whitelist;

  bool forbids(const std::string& from, const std::string& to) const {
    return blacklist.contains({from, to});
  }
};

/// Blacklists every arc from a later tier into an earlier tier, plus
/// within-tier arcs of tiers that disallow them. Throws UnassignedVariable,
/// UnknownVariable or InvalidArgument (variable in two tiers).
Constraints tiers_to_blacklist(const TierSpec& tiers,
                               const std::vector<std::string>& variables);
Constraints tiers_to_blacklist(const TierSpec& tiers,
                               const std::vector<Variable>& variables);

/// Throws UnsatisfiableConstraints when the whitelist meets the blacklist,
/// contains both directions of a pair, or is cyclic; UnknownVariable for
/// names outside `nodes`.
void check_constraints(const Constraints& constraints,
                       const std::vector<std::string>& nodes);

// True when no arc of the DAG is blacklisted and every whitelisted arc is present.
bool satisfies(const Dag& dag, const Constraints& constraints);

}  // namespace beliefnet
