#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "beliefnet/core/dag.hpp"
#include "beliefnet/data/counts.hpp"
#include "beliefnet/data/data_table.hpp"
#include "beliefnet/learn/sufficient_stats.hpp"

namespace beliefnet {

enum class ScoreKind { LogLik, AIC, BIC };

const char* to_string(ScoreKind kind);
// Accepts "aic", "bic", "loglik" (case-insensitive). Throws InvalidArgument.
ScoreKind parse_score_kind(const std::string& text);

/// sum_j sum_k N_ijk log(N_ijk / N_ij), natural log, with 0 log 0 = 0.
double local_loglik(const CountTable& counts);

/// Local log-likelihood minus the node's share of the penalty:
/// AIC subtracts q(r-1); BIC subtracts q(r-1)/2 * log(N).
double local_score(const CountTable& counts, ScoreKind kind, std::int64_t rows);

/// Network score as the sum of local terms in node order. DAG nodes are
/// matched to data columns by name; incomplete rows are excluded.
double score(const Dag& dag, const DataTable& data, ScoreKind kind);
double score(const Dag& dag, const SufficientStats& stats, ScoreKind kind);

/// Memo of local scores keyed by (node, parent set). Parent sets are stored
/// sorted, so permutations of the same set share an entry.
class ScoreCache {
 public:
  ScoreCache(const SufficientStats& stats, ScoreKind kind);

  double local(int node, std::span<const int> parents);

  std::uint64_t hits() const noexcept { return hits_; }
  std::uint64_t misses() const noexcept { return misses_; }
  const SufficientStats& stats() const noexcept { return *stats_; }
  ScoreKind kind() const noexcept { return kind_; }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<int>& key) const noexcept;
  };

  const SufficientStats* stats_;
  ScoreKind kind_;
  std::unordered_map<std::vector<int>, double, KeyHash> memo_;
  std::vector<int> key_;
  std::uint64_t hits_ = 0;
  std::uint64_t misses_ = 0;
};

}  // namespace beliefnet
