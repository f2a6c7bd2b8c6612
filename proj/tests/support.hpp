#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "beliefnet/core/network.hpp"
#include "beliefnet/data/data_table.hpp"
#include "beliefnet/util/random.hpp"

namespace bntest {

using beliefnet::Dag;
using beliefnet::FittedNetwork;
using beliefnet::ProbabilityMatrix;
using beliefnet::Rng;
using beliefnet::Variable;

struct RandomNetOptions {
  int min_nodes = 2;
  int max_nodes = 10;
  int min_levels = 2;
  int max_levels = 4;
  double arc_probability = 0.35;
  int max_parents = 3;
  double concentration = 1.0;  // Dirichlet parameter of every CPT row
};

inline int uniform_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(beliefnet::uniform_index(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

inline Eigen::VectorXd dirichlet(Rng& rng, int k, double concentration) {
  std::gamma_distribution<double> gamma(concentration, 1.0);
  Eigen::VectorXd v(k);
  for (int i = 0; i < k; ++i) v[i] = std::max(gamma(rng), 1e-12);
  return v / v.sum();
}

// Random DAG over n nodes: a shuffled order, arcs only forward in it.
inline Dag random_dag(Rng& rng, int n, double p, int max_parents) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("V" + std::to_string(i));
  Dag dag(names);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (static_cast<int>(dag.parents(order[j]).size()) >= max_parents) break;
      if (beliefnet::uniform01(rng) < p) dag.add_arc(order[i], order[j]);
    }
  }
  return dag;
}

inline FittedNetwork random_cpts(Rng& rng, const Dag& dag, const std::vector<int>& cards,
                                 double concentration) {
  std::vector<Variable> vars;
  for (std::size_t i = 0; i < dag.size(); ++i) {
    std::vector<std::string> levels;
    for (int k = 0; k < cards[i]; ++k) levels.push_back("s" + std::to_string(k));
    vars.emplace_back(dag.name(static_cast<int>(i)), levels);
  }
  std::vector<ProbabilityMatrix> tables;
  for (std::size_t i = 0; i < dag.size(); ++i) {
    int rows = 1;
    for (int p : dag.parents(static_cast<int>(i))) rows *= cards[p];
    ProbabilityMatrix t(rows, cards[i]);
    for (int r = 0; r < rows; ++r) t.row(r) = dirichlet(rng, cards[i], concentration).transpose();
    tables.push_back(t);
  }
  return FittedNetwork(vars, dag, tables);
}

inline FittedNetwork random_network(Rng& rng, const RandomNetOptions& o = {}) {
  const int n = uniform_int(rng, o.min_nodes, o.max_nodes);
  Dag dag = random_dag(rng, n, o.arc_probability, o.max_parents);
  std::vector<int> cards(n);
  for (int& c : cards) c = uniform_int(rng, o.min_levels, o.max_levels);
  return random_cpts(rng, dag, cards, o.concentration);
}

// Full joint by brute-force enumeration. Entry index is mixed radix over
// variables in network order, last variable fastest. CPT rows are located
// by walking the parent list directly (last parent fastest).
struct Joint {
  std::vector<int> cards;
  std::vector<double> p;

  std::vector<int> states(std::size_t index) const {
    std::vector<int> s(cards.size());
    for (int v = static_cast<int>(cards.size()) - 1; v >= 0; --v) {
      s[v] = static_cast<int>(index % cards[v]);
      index /= cards[v];
    }
    return s;
  }
};

inline Joint enumerate_joint(const FittedNetwork& net) {
  Joint j;
  std::size_t total = 1;
  for (const auto& v : net.variables()) {
    j.cards.push_back(v.cardinality());
    total *= static_cast<std::size_t>(v.cardinality());
  }
  j.p.resize(total);
  std::vector<int> s(j.cards.size(), 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    double prod = 1.0;
    for (std::size_t v = 0; v < s.size(); ++v) {
      const auto& parents = net.dag().parents(static_cast<int>(v));
      int row = 0;
      for (int p : parents) row = row * j.cards[p] + s[p];
      prod *= net.cpt(static_cast<int>(v)).table(row, s[v]);
    }
    j.p[idx] = prod;
    for (int v = static_cast<int>(s.size()) - 1; v >= 0; --v) {
      if (++s[v] < j.cards[v]) break;
      s[v] = 0;
    }
  }
  return j;
}

// P(target | evidence) from the joint; evidence maps node -> state.
inline Eigen::VectorXd enumerate_posterior(const Joint& j, int target,
                                           const std::map<int, int>& evidence,
                                           double* evidence_probability = nullptr) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(j.cards[target]);
  std::vector<int> s(j.cards.size(), 0);
  for (std::size_t idx = 0; idx < j.p.size(); ++idx) {
    bool match = true;
    for (auto [v, st] : evidence) {
      if (s[v] != st) {
        match = false;
        break;
      }
    }
    if (match) out[s[target]] += j.p[idx];
    for (int v = static_cast<int>(s.size()) - 1; v >= 0; --v) {
      if (++s[v] < j.cards[v]) break;
      s[v] = 0;
    }
  }
  const double z = out.sum();
  if (evidence_probability) *evidence_probability = z;
  return out / z;
}

// Two-way marginal P(a, b) as a card(a) x card(b) matrix.
inline Eigen::MatrixXd enumerate_pair(const Joint& j, int a, int b) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(j.cards[a], j.cards[b]);
  for (std::size_t idx = 0; idx < j.p.size(); ++idx) {
    const auto s = j.states(idx);
    out(s[a], s[b]) += j.p[idx];
  }
  return out;
}

inline beliefnet::Evidence evidence_of(const FittedNetwork& net, const std::map<int, int>& e) {
  beliefnet::Evidence ev;
  for (auto [v, s] : e) ev.set(net.variable(v).name(), net.variable(v).level(s));
  return ev;
}

// Network score recomputed in one pass over the rows: tallies N_ijk per
// family in a map, sums N_ijk log(N_ijk / N_ij) and subtracts the penalty
// (q(r-1) per node for AIC, times log(N)/2 for BIC). Incomplete rows are
// skipped entirely.
inline double score_oracle(const Dag& dag, const beliefnet::DataTable& data, bool bic) {
  const int n = static_cast<int>(dag.size());
  std::vector<int> col(n);
  for (int v = 0; v < n; ++v) col[v] = data.index_of(dag.name(v));
  std::vector<std::map<std::vector<int>, std::map<int, double>>> tally(n);
  double rows = 0.0;
  for (std::size_t r = 0; r < data.rows(); ++r) {
    bool complete = true;
    for (std::size_t c = 0; c < data.cols(); ++c) complete &= !data.is_missing(r, static_cast<int>(c));
    if (!complete) continue;
    rows += 1.0;
    for (int v = 0; v < n; ++v) {
      std::vector<int> key;
      for (int p : dag.parents(v)) key.push_back(data.value(r, col[p]));
      tally[v][key][data.value(r, col[v])] += 1.0;
    }
  }
  double total = 0.0;
  for (int v = 0; v < n; ++v) {
    for (const auto& [key, cells] : tally[v]) {
      double nij = 0.0;
      for (const auto& [k, c] : cells) nij += c;
      for (const auto& [k, c] : cells) total += c * std::log(c / nij);
    }
    double q = 1.0;
    for (int p : dag.parents(v)) q *= data.variable(col[p]).cardinality();
    const double d = q * (data.variable(col[v]).cardinality() - 1);
    total -= bic ? d * std::log(rows) / 2.0 : d;
  }
  return total;
}

// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("beliefnet-" + tag + "-" + std::to_string(rd()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace bntest
