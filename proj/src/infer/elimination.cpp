#include "beliefnet/infer/elimination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "beliefnet/core/error.hpp"

namespace beliefnet {
namespace {

// Fill-in edges created by eliminating `v` from the interaction graph.
int fill_in(const std::vector<std::set<int>>& graph, int v) {
  int fill = 0;
  const auto& nb = graph[v];
  for (auto i = nb.begin(); i != nb.end(); ++i) {
    for (auto j = std::next(i); j != nb.end(); ++j) {
      if (!graph[*i].contains(*j)) ++fill;
    }
  }
  return fill;
}

std::vector<int> min_fill_order(const std::vector<Factor>& factors,
                                const std::vector<int>& to_eliminate, std::size_t n) {
  std::vector<std::set<int>> graph(n);
  for (const auto& f : factors) {
    for (int a : f.scope()) {
      for (int b : f.scope()) {
        if (a != b) graph[a].insert(b);
      }
    }
  }
  std::set<int> remaining(to_eliminate.begin(), to_eliminate.end());
  std::vector<int> order;
  while (!remaining.empty()) {
    int best = -1;
    int best_fill = std::numeric_limits<int>::max();
    for (int v : remaining) {
      const int f = fill_in(graph, v);
      if (f < best_fill) {
        best_fill = f;
        best = v;
      }
    }
    order.push_back(best);
    remaining.erase(best);
    const auto nb = graph[best];
    for (int a : nb) {
      for (int b : nb) {
        if (a != b) graph[a].insert(b);
      }
      graph[a].erase(best);
    }
    graph[best].clear();
  }
  return order;
}

}  // namespace

JointQuery joint_posterior(const FittedNetwork& net, const std::vector<int>& query,
                           const std::vector<int>& evidence_states,
                           const std::optional<std::vector<int>>& order) {
  const std::size_t n = net.size();
  if (evidence_states.size() != n) {
    throw Error(ErrorKind::InvalidArgument, "evidence vector size does not match network");
  }
  std::vector<char> is_query(n, 0);
  for (int q : query) {
    if (q < 0 || q >= static_cast<int>(n)) {
      throw Error(ErrorKind::UnknownVariable, "query variable out of range");
    }
    if (evidence_states[q] != kUnobserved) {
      throw Error(ErrorKind::InvalidArgument,
                  "query variable '" + net.variable(q).name() + "' is observed");
    }
    if (is_query[q]) throw Error(ErrorKind::InvalidArgument, "query variable repeated");
    is_query[q] = 1;
  }

  // Barren-node pruning: keep queried and observed nodes and their ancestors.
  std::vector<int> roots(query.begin(), query.end());
  for (std::size_t v = 0; v < n; ++v) {
    if (evidence_states[v] != kUnobserved) roots.push_back(static_cast<int>(v));
  }
  std::vector<char> relevant(n, 0);
  for (int v : roots) relevant[v] = 1;
  for (int v : ancestors(net.dag(), roots)) relevant[v] = 1;

  std::vector<Factor> factors;
  for (std::size_t v = 0; v < n; ++v) {
    if (!relevant[v]) continue;
    Factor f = Factor::from_cpt(net, static_cast<int>(v));
    for (int s : std::vector<int>(f.scope())) {
      if (evidence_states[s] != kUnobserved) f = f.reduce(s, evidence_states[s]);
    }
    factors.push_back(std::move(f));
  }

  std::vector<int> to_eliminate;
  for (std::size_t v = 0; v < n; ++v) {
    if (relevant[v] && !is_query[v] && evidence_states[v] == kUnobserved) {
      to_eliminate.push_back(static_cast<int>(v));
    }
  }

  std::vector<int> elimination;
  if (order) {
    for (int v : *order) {
      if (std::find(to_eliminate.begin(), to_eliminate.end(), v) != to_eliminate.end() &&
          std::find(elimination.begin(), elimination.end(), v) == elimination.end()) {
        elimination.push_back(v);
      }
    }
    if (elimination.size() != to_eliminate.size()) {
      throw Error(ErrorKind::InvalidArgument,
                  "elimination order does not cover every variable to eliminate");
    }
  } else {
    elimination = min_fill_order(factors, to_eliminate, n);
  }

  double log_scale = 0.0;
  for (int v : elimination) {
    Factor product;
    std::vector<Factor> rest;
    for (auto& f : factors) {
      if (f.contains(v)) {
        product = product * f;
      } else {
        rest.push_back(std::move(f));
      }
    }
    Factor message = product.sum_out(v);
    const double peak = message.values().maxCoeff();
    if (peak > 0.0) {
      message.values() /= peak;
      log_scale += std::log(peak);
    }
    rest.push_back(std::move(message));
    factors = std::move(rest);
  }

  Factor joint;
  for (const auto& f : factors) joint = joint * f;
  // Each query variable's own CPT survives pruning, so the remaining scope is
  // exactly the query set.
  joint = joint.reordered(query);

  const double total = joint.total();
  const double log_pe = total > 0.0 ? std::log(total) + log_scale
                                    : -std::numeric_limits<double>::infinity();
  if (!(log_pe >= std::log(kZeroEvidenceThreshold))) {
    throw Error(ErrorKind::ZeroProbabilityEvidence,
                "evidence has probability below 1e-300");
  }
  joint.values() /= total;
  return {std::move(joint), log_pe, std::move(elimination)};
}

namespace {

QueryResult make_result(const FittedNetwork& net, int target, const Evidence& evidence,
                        JointQuery&& q) {
  QueryResult r;
  r.target = net.variable(target).name();
  r.levels = net.variable(target).levels();
  r.distribution = std::move(q.joint.values());
  r.evidence = evidence;
  r.log_evidence_probability = q.log_evidence_probability;
  r.evidence_probability = std::exp(q.log_evidence_probability);
  for (int v : q.elimination_order) r.elimination_order.push_back(net.variable(v).name());
  return r;
}

}  // namespace

QueryResult posterior(const FittedNetwork& net, std::string_view target,
                      const Evidence& evidence) {
  const int t = net.index_of(target);
  auto states = resolve_evidence(net, evidence);
  return make_result(net, t, evidence, joint_posterior(net, {t}, states));
}

QueryResult posterior(const FittedNetwork& net, std::string_view target,
                      const Evidence& evidence,
                      const std::vector<std::string>& elimination_order) {
  const int t = net.index_of(target);
  auto states = resolve_evidence(net, evidence);
  std::vector<int> order;
  for (const auto& name : elimination_order) order.push_back(net.index_of(name));
  return make_result(net, t, evidence, joint_posterior(net, {t}, states, order));
}

std::vector<QueryResult> conditional_table(const FittedNetwork& net,
                                           std::string_view target,
                                           std::string_view sweep) {
  const int t = net.index_of(target);
  const int s = net.index_of(sweep);
  if (t == s) {
    throw Error(ErrorKind::InvalidArgument, "sweep variable equals the target");
  }
  std::vector<QueryResult> rows;
  rows.push_back(posterior(net, target));
  for (const auto& level : net.variable(s).levels()) {
    Evidence e;
    e.set(std::string(sweep), level);
    rows.push_back(posterior(net, target, e));
  }
  return rows;
}

}  // namespace beliefnet
