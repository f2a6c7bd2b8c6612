#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "beliefnet/core/dag.hpp"
#include "beliefnet/data/data_table.hpp"
#include "beliefnet/learn/constraints.hpp"
#include "beliefnet/learn/score.hpp"
#include "beliefnet/learn/sufficient_stats.hpp"

namespace beliefnet {

enum class MoveKind { AddArc, DeleteArc, ReverseArc };

struct Move {
  MoveKind kind = MoveKind::AddArc;
  Arc arc;
  friend auto operator<=>(const Move&, const Move&) = default;
};

/// Tabu search settings. `restarts` counts search runs: the first starts from
/// the empty (whitelist-only) graph, later ones from the best graph after
/// `perturbation` random legal moves.
struct TabuConfig {
  int tenure = 10;
  int max_iterations = 100000;
  int stall_limit = 100;
  int restarts = 1;
  int perturbation = 3;
  std::uint64_t seed = 0;
};

// Throws InvalidArgument unless every field is positive.
void validate(const TabuConfig& config);

struct TabuResult {
  Dag dag;
  double score = 0.0;
  int iterations = 0;
  // Best score seen so far, after each iteration.
  std::vector<double> best_trace;
  std::uint64_t cache_hits = 0;
  std::uint64_t cache_misses = 0;
};

/// Score-based structure search over add/delete/reverse moves.
///
/// Each step applies the best allowed move, improving or not. The inverse of
/// an applied move stays tabu for `tenure` steps unless it would beat the
/// best score so far. A run stops after `stall_limit` steps without a new
/// best; the best graph is then hill-climbed until no single legal move
/// improves it. Ties between equally scored moves are broken with the seeded
/// generator. Throws UnsatisfiableConstraints.
TabuResult tabu_search(const SufficientStats& stats, ScoreKind kind,
                       const Constraints& constraints, const TabuConfig& config);
TabuResult tabu_search(const DataTable& data, ScoreKind kind,
                       const Constraints& constraints, const TabuConfig& config);

/// Every single move that keeps the graph acyclic and constraint-valid.
std::vector<Move> legal_moves(const Dag& dag, const Constraints& constraints);
Dag apply_move(const Dag& dag, const Move& move);

}  // namespace beliefnet
