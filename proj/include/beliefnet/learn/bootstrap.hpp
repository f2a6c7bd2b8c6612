#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "beliefnet/core/dag.hpp"
#include "beliefnet/data/data_table.hpp"
#include "beliefnet/learn/constraints.hpp"
#include "beliefnet/learn/score.hpp"
#include "beliefnet/learn/tabu.hpp"

namespace beliefnet {

/// Bootstrap arc tallies over B replicate DAGs.
///
/// strength(a, b): fraction of replicates with an arc between a and b in
/// either direction (symmetric). direction(a, b): fraction of those
/// replicates where the arc is a -> b (zero when strength is zero).
/// arc_frequency(a, b): fraction of replicates containing a -> b.
struct ArcStrengthTable {
  std::vector<std::string> nodes;
  int replicates = 0;
  Eigen::MatrixXi directed_counts;  // (a, b): replicates containing a -> b

  std::size_t size() const { return nodes.size(); }
  double strength(int a, int b) const;
  double direction(int a, int b) const;
  double arc_frequency(int a, int b) const;
  int index_of(const std::string& name) const;

  // Adds one DAG (over the same nodes) to the tally.
  void add(const Dag& dag);
  // Sums two tables over the same nodes.
  void merge(const ArcStrengthTable& other);
  // Strength of every unordered pair {a, b}, a < b.
  std::vector<double> pair_strengths() const;

  friend bool operator==(const ArcStrengthTable& a, const ArcStrengthTable& b) {
    return a.nodes == b.nodes && a.replicates == b.replicates &&
           a.directed_counts.rows() == b.directed_counts.rows() &&
           a.directed_counts == b.directed_counts;
  }
};

ArcStrengthTable empty_strengths(std::vector<std::string> nodes);

struct BootstrapConfig {
  int replicates = 2000;
  ScoreKind score = ScoreKind::AIC;
  TabuConfig tabu;
  std::uint64_t seed = 0;
  int workers = 1;
};

/// Replicate r resamples N rows with replacement using a generator seeded by
/// derive_seed(seed, 2r) and runs tabu search seeded by derive_seed(seed,
/// 2r + 1), so the table does not depend on the worker count or schedule.
/// Search errors are rethrown with the replicate index.
ArcStrengthTable bootstrap_strengths(const DataTable& data, const Constraints& constraints,
                                     const BootstrapConfig& config);

/// CSV columns: from,to,strength,direction,arc_frequency; one line per
/// ordered pair, 12 significant digits.
std::string strengths_csv(const ArcStrengthTable& table);
// Reads strengths_csv output back (counts are recovered from frequencies).
ArcStrengthTable parse_strengths_csv(std::string_view text, int replicates);

}  // namespace beliefnet
