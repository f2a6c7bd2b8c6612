#pragma once

#include <string>
#include <vector>

namespace beliefnet {

/// Ordered groups of variables; arcs may not point from a later tier into an
/// earlier one. `within_tier_edges[t]` allows arcs inside tier t (default
/// true when the vector is shorter than `tiers`).
struct TierSpec {
  std::vector<std::vector<std::string>> tiers;
  std::vector<bool> within_tier_edges;

  bool allows_within(std::size_t tier) const {
    return tier >= within_tier_edges.size() || within_tier_edges[tier];
  }
};

}  // namespace beliefnet
