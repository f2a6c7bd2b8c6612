#pragma once

#include <Eigen/Dense>

#include "beliefnet/core/dag.hpp"

namespace beliefnet {

/// Partially directed graph as an adjacency matrix: (a, b) = 1 and
/// (b, a) = 0 for a directed arc a -> b, both 1 for an undirected edge.
using PdagMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

/// Completed PDAG of the DAG's Markov equivalence class: v-structure arcs,
/// then arcs compelled by the Meek orientation rules; the rest undirected.
PdagMatrix cpdag(const Dag& dag);

/// Structural Hamming distance: node pairs whose edge status (absent,
/// undirected, a -> b, b -> a) differs between the two graphs.
int structural_hamming_distance(const PdagMatrix& a, const PdagMatrix& b);

}  // namespace beliefnet
