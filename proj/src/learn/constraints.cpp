#include "beliefnet/learn/constraints.hpp"

#include <algorithm>
#include <map>

#include "beliefnet/core/error.hpp"

namespace beliefnet {

Constraints tiers_to_blacklist(const TierSpec& tiers,
                               const std::vector<std::string>& variables) {
  std::map<std::string, std::size_t> tier_of;
  for (std::size_t t = 0; t < tiers.tiers.size(); ++t) {
    if (tiers.tiers[t].empty()) {
      throw Error(ErrorKind::InvalidArgument, "tier " + std::to_string(t) + " is empty");
    }
    for (const auto& name : tiers.tiers[t]) {
      if (std::find(variables.begin(), variables.end(), name) == variables.end()) {
        throw Error(ErrorKind::UnknownVariable, "tier member '" + name + "' is not a variable");
      }
      if (!tier_of.emplace(name, t).second) {
        throw Error(ErrorKind::InvalidArgument, "'" + name + "' appears in two tiers");
      }
    }
  }
  for (const auto& name : variables) {
    if (!tier_of.contains(name)) {
      throw Error(ErrorKind::UnassignedVariable, "'" + name + "' is in no tier");
    }
  }
  Constraints out;
  for (const auto& from : variables) {
    for (const auto& to : variables) {
      if (from == to) continue;
      const std::size_t tf = tier_of[from];
      const std::size_t tt = tier_of[to];
      if (tf > tt || (tf == tt && !tiers.allows_within(tf))) {
        out.blacklist.emplace(from, to);
      }
    }
  }
  return out;
}

Constraints tiers_to_blacklist(const TierSpec& tiers,
                               const std::vector<Variable>& variables) {
  std::vector<std::string> names;
  for (const auto& v : variables) names.push_back(v.name());
  return tiers_to_blacklist(tiers, names);
}

void check_constraints(const Constraints& constraints,
                       const std::vector<std::string>& nodes) {
  Dag required(nodes);
  auto check_known = [&](const NamedArc& arc) {
    if (!required.find(arc.first) || !required.find(arc.second)) {
      throw Error(ErrorKind::UnknownVariable,
                  "constraint arc " + arc.first + " -> " + arc.second +
                      " names an unknown variable");
    }
  };
  for (const auto& arc : constraints.blacklist) check_known(arc);
  for (const auto& arc : constraints.whitelist) {
    check_known(arc);
    if (arc.first == arc.second) {
      throw Error(ErrorKind::UnsatisfiableConstraints,
                  "whitelisted self-loop on '" + arc.first + "'");
    }
    if (constraints.blacklist.contains(arc)) {
      throw Error(ErrorKind::UnsatisfiableConstraints,
                  "arc " + arc.first + " -> " + arc.second +
                      " is both whitelisted and blacklisted");
    }
    if (constraints.whitelist.contains({arc.second, arc.first})) {
      throw Error(ErrorKind::UnsatisfiableConstraints,
                  "both directions of " + arc.first + " - " + arc.second +
                      " are whitelisted");
    }
    required.add_arc(arc.first, arc.second);
  }
  try {
    topological_indices(required);
  } catch (const Error& e) {
    throw Error(ErrorKind::UnsatisfiableConstraints,
                std::string("whitelist is cyclic: ") + e.what());
  }
}

bool satisfies(const Dag& dag, const Constraints& constraints) {
  for (const auto& arc : dag.arcs()) {
    if (constraints.forbids(dag.name(arc.from), dag.name(arc.to))) return false;
  }
  for (const auto& [from, to] : constraints.whitelist) {
    auto f = dag.find(from);
    auto t = dag.find(to);
    if (!f || !t || !dag.has_arc(*f, *t)) return false;
  }
  return true;
}

}  // namespace beliefnet
