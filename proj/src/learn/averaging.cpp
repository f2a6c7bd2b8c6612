#include "beliefnet/learn/averaging.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "beliefnet/core/error.hpp"
#include "beliefnet/util/log.hpp"

namespace beliefnet {

double threshold_objective(const std::vector<double>& strengths, double p) {
  std::vector<double> s = strengths;
  std::sort(s.begin(), s.end());
  const double m = static_cast<double>(s.size());
  const double target = 1.0 - p;
  // The empirical CDF is constant on [x, next breakpoint).
  double total = 0.0;
  double x = 0.0;
  std::size_t below = 0;  // strengths <= x
  while (below < s.size() && s[below] <= x) ++below;
  while (x < 1.0) {
    const double next = below < s.size() ? std::min(s[below], 1.0) : 1.0;
    total += (next - x) * std::abs(static_cast<double>(below) / m - target);
    x = next;
    while (below < s.size() && s[below] <= x) ++below;
    if (next >= 1.0) break;
  }
  return total;
}

double optimal_threshold(const std::vector<double>& pair_strengths) {
  std::vector<double> candidates;
  for (double s : pair_strengths) {
    if (s > 0.0) candidates.push_back(s);
  }
  if (candidates.empty()) {
    throw Error(ErrorKind::EmptyStrengths, "no pair has positive strength");
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  const bool can_reject_all = candidates.back() < 1.0;
  if (can_reject_all) candidates.push_back(1.0);

  const double m = static_cast<double>(pair_strengths.size());
  double best_t = candidates.front();
  double best = std::numeric_limits<double>::infinity();
  for (double t : candidates) {
    const auto significant = std::count_if(pair_strengths.begin(), pair_strengths.end(),
                                           [&](double s) { return s >= t; });
    const double objective = threshold_objective(pair_strengths, significant / m);
    // Ascending candidates: only a strict improvement replaces the smaller t.
    if (objective < best - 1e-12) {
      best = objective;
      best_t = t;
    }
  }
  return best_t;
}

double optimal_threshold(const ArcStrengthTable& strengths) {
  return optimal_threshold(strengths.pair_strengths());
}

AveragedNetwork averaged_network(const ArcStrengthTable& strengths, double threshold,
                                 const Constraints& constraints) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "threshold must lie in (0, 1]");
  }
  AveragedNetwork out;
  out.threshold = threshold;
  out.dag = Dag(strengths.nodes);
  for (const auto& [from, to] : constraints.whitelist) {
    out.dag.add_arc(from, to);
  }

  struct Edge {
    int a, b;
    double strength;
  };
  std::vector<Edge> edges;
  const int n = static_cast<int>(strengths.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const double s = strengths.strength(a, b);
      if (s >= threshold) edges.push_back({a, b, s});
    }
  }
  std::stable_sort(edges.begin(), edges.end(),
                   [](const Edge& x, const Edge& y) { return x.strength > y.strength; });

  for (const auto& e : edges) {
    const bool forward = strengths.direction(e.a, e.b) >= strengths.direction(e.b, e.a);
    const int from = forward ? e.a : e.b;
    const int to = forward ? e.b : e.a;
    if (out.dag.has_arc(from, to) || out.dag.has_arc(to, from)) continue;
    const std::string& fname = strengths.nodes[from];
    const std::string& tname = strengths.nodes[to];
    std::string reason;
    if (constraints.forbids(fname, tname)) {
      reason = "blacklist";
    } else if (out.dag.reachable(to, from)) {
      reason = "cycle";
    }
    if (!reason.empty()) {
      log::warn("consensus skipped " + fname + " -> " + tname + " (" + reason + ")");
      out.skipped.push_back({fname, tname, e.strength, reason});
      continue;
    }
    out.dag.add_arc(from, to);
  }
  out.dag.canonicalize();
  return out;
}

}  // namespace beliefnet
