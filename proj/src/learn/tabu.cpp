#include "beliefnet/learn/tabu.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <optional>

#include "beliefnet/core/error.hpp"
#include "beliefnet/util/random.hpp"

namespace beliefnet {

void validate(const TabuConfig& config) {
  if (config.tenure <= 0 || config.max_iterations <= 0 || config.stall_limit <= 0 ||
      config.restarts <= 0 || config.perturbation <= 0) {
    throw Error(ErrorKind::InvalidArgument, "tabu settings must all be positive");
  }
}

namespace {

Move inverse(const Move& m) {
  switch (m.kind) {
    case MoveKind::AddArc: return {MoveKind::DeleteArc, m.arc};
    case MoveKind::DeleteArc: return {MoveKind::AddArc, m.arc};
    case MoveKind::ReverseArc: return {MoveKind::ReverseArc, {m.arc.to, m.arc.from}};
  }
  return m;
}

double improvement_tolerance(double score) {
  return 1e-9 * std::max(1.0, std::abs(score));
}

/// Search state with incremental score deltas.
///
/// toggle_(i, j) holds local(j, parents(j) xor {i}) - local(j), so the delta
/// of any move reads one or two entries and only the columns of nodes whose
/// parents changed need refreshing.
class Search {
 public:
  Search(const SufficientStats& stats, ScoreKind kind, const Constraints& constraints)
      : n_(static_cast<int>(stats.variable_count())),
        cache_(stats, kind),
        adj_(n_ * n_, 0),
        forbidden_(n_ * n_, 0),
        required_(n_ * n_, 0),
        reach_(n_ * n_, 0),
        parents_(n_),
        local_(n_, 0.0),
        toggle_(n_ * n_, 0.0) {
    std::vector<std::string> names;
    for (const auto& v : stats.variables()) names.push_back(v.name());
    nodes_ = names;
    check_constraints(constraints, names);
    Dag lookup(names);
    for (const auto& [from, to] : constraints.blacklist) {
      forbidden_[lookup.index_of(from) * n_ + lookup.index_of(to)] = 1;
    }
    for (const auto& [from, to] : constraints.whitelist) {
      required_[lookup.index_of(from) * n_ + lookup.index_of(to)] = 1;
    }
    reset_to_whitelist();
  }

  void reset_to_whitelist() {
    std::fill(adj_.begin(), adj_.end(), 0);
    for (auto& p : parents_) p.clear();
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (required_[i * n_ + j]) {
          adj_[i * n_ + j] = 1;
          parents_[j].push_back(i);
        }
      }
    }
    for (int j = 0; j < n_; ++j) refresh_column(j);
  }

  void load(const std::vector<char>& adjacency) {
    adj_ = adjacency;
    for (int j = 0; j < n_; ++j) {
      parents_[j].clear();
      for (int i = 0; i < n_; ++i) {
        if (adj_[i * n_ + j]) parents_[j].push_back(i);
      }
      refresh_column(j);
    }
  }

  double total() const {
    double s = 0.0;
    for (double l : local_) s += l;
    return s;
  }

  const std::vector<char>& adjacency() const { return adj_; }

  struct Candidate {
    Move move;
    double delta;
  };

  // All legal moves with their score deltas.
  const std::vector<Candidate>& candidates() {
    compute_reachability();
    cand_.clear();
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (i == j) continue;
        if (adj_[i * n_ + j]) {
          if (required_[i * n_ + j]) continue;
          cand_.push_back({{MoveKind::DeleteArc, {i, j}}, toggle_[i * n_ + j]});
          if (!forbidden_[j * n_ + i] && !indirect_path(i, j)) {
            cand_.push_back({{MoveKind::ReverseArc, {i, j}},
                             toggle_[i * n_ + j] + toggle_[j * n_ + i]});
          }
        } else if (!adj_[j * n_ + i] && !forbidden_[i * n_ + j] && !reach_[j * n_ + i]) {
          cand_.push_back({{MoveKind::AddArc, {i, j}}, toggle_[i * n_ + j]});
        }
      }
    }
    return cand_;
  }

  void apply(const Move& m) {
    const int i = m.arc.from;
    const int j = m.arc.to;
    switch (m.kind) {
      case MoveKind::AddArc:
        set_arc(i, j, true);
        refresh_column(j);
        break;
      case MoveKind::DeleteArc:
        set_arc(i, j, false);
        refresh_column(j);
        break;
      case MoveKind::ReverseArc:
        set_arc(i, j, false);
        set_arc(j, i, true);
        refresh_column(j);
        refresh_column(i);
        break;
    }
  }

  Dag to_dag() const {
    Dag dag(nodes_);
    for (int j = 0; j < n_; ++j) {
      for (int i : parents_[j]) dag.add_arc(i, j);
    }
    dag.canonicalize();
    return dag;
  }

  const ScoreCache& cache() const { return cache_; }

 private:
  void set_arc(int i, int j, bool present) {
    adj_[i * n_ + j] = present ? 1 : 0;
    auto& pa = parents_[j];
    if (present) {
      pa.insert(std::lower_bound(pa.begin(), pa.end(), i), i);
    } else {
      pa.erase(std::find(pa.begin(), pa.end(), i));
    }
  }

  void refresh_column(int j) {
    local_[j] = cache_.local(j, parents_[j]);
    for (int i = 0; i < n_; ++i) {
      if (i == j) continue;
      scratch_ = parents_[j];
      auto it = std::find(scratch_.begin(), scratch_.end(), i);
      if (it != scratch_.end()) {
        scratch_.erase(it);
      } else {
        scratch_.insert(std::lower_bound(scratch_.begin(), scratch_.end(), i), i);
      }
      toggle_[i * n_ + j] = cache_.local(j, scratch_) - local_[j];
    }
  }

  void compute_reachability() {
    std::fill(reach_.begin(), reach_.end(), 0);
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
      char* row = &reach_[s * n_];
      row[s] = 1;
      stack.assign(1, s);
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int c = 0; c < n_; ++c) {
          if (adj_[v * n_ + c] && !row[c]) {
            row[c] = 1;
            stack.push_back(c);
          }
        }
      }
    }
  }

  // A directed path i -> ... -> j other than the arc i -> j itself.
  bool indirect_path(int i, int j) const {
    for (int k = 0; k < n_; ++k) {
      if (k != j && adj_[i * n_ + k] && reach_[k * n_ + j]) return true;
    }
    return false;
  }

  int n_;
  std::vector<std::string> nodes_;
  ScoreCache cache_;
  std::vector<char> adj_;
  std::vector<char> forbidden_;
  std::vector<char> required_;
  std::vector<char> reach_;
  std::vector<std::vector<int>> parents_;
  std::vector<double> local_;
  std::vector<double> toggle_;
  std::vector<int> scratch_;
  std::vector<Candidate> cand_;
};

// Index of the best candidate; near-ties are resolved uniformly at random.
template <typename Allowed>
std::optional<std::size_t> pick(const std::vector<Search::Candidate>& cands,
                                Allowed allowed, double scale, Rng& rng) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < cands.size(); ++c) {
    if (allowed(cands[c]) && cands[c].delta > best) best = cands[c].delta;
  }
  if (best == -std::numeric_limits<double>::infinity()) return std::nullopt;
  const double tol = improvement_tolerance(scale);
  std::vector<std::size_t> ties;
  for (std::size_t c = 0; c < cands.size(); ++c) {
    if (allowed(cands[c]) && cands[c].delta >= best - tol) ties.push_back(c);
  }
  return ties[ties.size() == 1 ? 0 : uniform_index(rng, ties.size())];
}

void hill_climb(Search& search, Rng& rng) {
  for (;;) {
    const double current = search.total();
    const double tol = improvement_tolerance(current);
    const auto& cands = search.candidates();
    auto choice = pick(cands, [&](const Search::Candidate& c) { return c.delta > tol; },
                       current, rng);
    if (!choice) return;
    search.apply(cands[*choice].move);
  }
}

}  // namespace

TabuResult tabu_search(const SufficientStats& stats, ScoreKind kind,
                       const Constraints& constraints, const TabuConfig& config) {
  validate(config);
  Search search(stats, kind, constraints);
  Rng rng(config.seed);

  TabuResult result;
  std::vector<char> best_adj = search.adjacency();
  double best_score = search.total();

  for (int run = 0; run < config.restarts; ++run) {
    if (run > 0) {
      search.load(best_adj);
      for (int p = 0; p < config.perturbation; ++p) {
        const auto& cands = search.candidates();
        if (cands.empty()) break;
        search.apply(cands[uniform_index(rng, cands.size())].move);
      }
    }
    std::deque<Move> tabu;
    int stall = 0;
    for (int iter = 0; iter < config.max_iterations && stall < config.stall_limit; ++iter) {
      const double current = search.total();
      const auto& cands = search.candidates();
      auto allowed = [&](const Search::Candidate& c) {
        if (std::find(tabu.begin(), tabu.end(), c.move) == tabu.end()) return true;
        return current + c.delta > best_score + improvement_tolerance(best_score);
      };
      auto choice = pick(cands, allowed, current, rng);
      if (!choice) break;
      const Move move = cands[*choice].move;
      search.apply(move);
      tabu.push_back(inverse(move));
      if (static_cast<int>(tabu.size()) > config.tenure) tabu.pop_front();

      const double now = search.total();
      if (now > best_score + improvement_tolerance(best_score)) {
        best_score = now;
        best_adj = search.adjacency();
        stall = 0;
      } else {
        ++stall;
      }
      ++result.iterations;
      result.best_trace.push_back(best_score);
    }
    search.load(best_adj);
    hill_climb(search, rng);
    if (search.total() >= best_score) {
      best_score = search.total();
      best_adj = search.adjacency();
    }
    result.best_trace.push_back(best_score);
  }

  search.load(best_adj);
  result.dag = search.to_dag();
  result.score = search.total();
  result.cache_hits = search.cache().hits();
  result.cache_misses = search.cache().misses();
  return result;
}

TabuResult tabu_search(const DataTable& data, ScoreKind kind,
                       const Constraints& constraints, const TabuConfig& config) {
  return tabu_search(SufficientStats(data), kind, constraints, config);
}

std::vector<Move> legal_moves(const Dag& dag, const Constraints& constraints) {
  std::vector<Move> out;
  const int n = static_cast<int>(dag.size());
  auto forbidden = [&](int i, int j) {
    return constraints.forbids(dag.name(i), dag.name(j));
  };
  auto required = [&](int i, int j) {
    return constraints.whitelist.contains({dag.name(i), dag.name(j)});
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (dag.has_arc(i, j)) {
        if (required(i, j)) continue;
        out.push_back({MoveKind::DeleteArc, {i, j}});
        Dag reversed = dag;
        reversed.reverse_arc(i, j);
        if (!forbidden(j, i) && is_acyclic(reversed)) {
          out.push_back({MoveKind::ReverseArc, {i, j}});
        }
      } else if (!dag.has_arc(j, i) && !forbidden(i, j) && !dag.reachable(j, i)) {
        out.push_back({MoveKind::AddArc, {i, j}});
      }
    }
  }
  return out;
}

Dag apply_move(const Dag& dag, const Move& move) {
  Dag out = dag;
  switch (move.kind) {
    case MoveKind::AddArc: out.add_arc(move.arc.from, move.arc.to); break;
    case MoveKind::DeleteArc: out.remove_arc(move.arc.from, move.arc.to); break;
    case MoveKind::ReverseArc: out.reverse_arc(move.arc.from, move.arc.to); break;
  }
  out.canonicalize();
  return out;
}

}  // namespace beliefnet
