#pragma once

#include <cstdint>

#include "beliefnet/core/network.hpp"
#include "beliefnet/data/data_table.hpp"

namespace beliefnet {

/// Ancestral sampling in topological order; deterministic given the seed.
/// Columns follow the network's variable order.
DataTable sample(const FittedNetwork& net, std::size_t n, std::uint64_t seed);

}  // namespace beliefnet
