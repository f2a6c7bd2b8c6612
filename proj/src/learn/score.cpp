#include "beliefnet/learn/score.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "beliefnet/core/error.hpp"

namespace beliefnet {

const char* to_string(ScoreKind kind) {
  switch (kind) {
    case ScoreKind::LogLik: return "loglik";
    case ScoreKind::AIC: return "aic";
    case ScoreKind::BIC: return "bic";
  }
  return "?";
}

ScoreKind parse_score_kind(const std::string& text) {
  std::string lower;
  for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "aic") return ScoreKind::AIC;
  if (lower == "bic") return ScoreKind::BIC;
  if (lower == "loglik") return ScoreKind::LogLik;
  throw Error(ErrorKind::InvalidArgument, "unknown score '" + text + "'");
}

double local_loglik(const CountTable& counts) {
  double ll = 0.0;
  for (int j = 0; j < counts.configurations(); ++j) {
    const std::int64_t nij = counts.counts.row(j).sum();
    if (nij == 0) continue;
    const double log_nij = std::log(static_cast<double>(nij));
    for (int k = 0; k < counts.states(); ++k) {
      const std::int64_t nijk = counts.counts(j, k);
      if (nijk == 0) continue;
      const double n = static_cast<double>(nijk);
      ll += n * (std::log(n) - log_nij);
    }
  }
  return ll;
}

double local_score(const CountTable& counts, ScoreKind kind, std::int64_t rows) {
  const double ll = local_loglik(counts);
  const double d = static_cast<double>(counts.configurations()) * (counts.states() - 1);
  switch (kind) {
    case ScoreKind::LogLik: return ll;
    case ScoreKind::AIC: return ll - d;
    case ScoreKind::BIC:
      return ll - 0.5 * d * std::log(static_cast<double>(std::max<std::int64_t>(rows, 1)));
  }
  return ll;
}

double score(const Dag& dag, const SufficientStats& stats, ScoreKind kind) {
  double total = 0.0;
  for (std::size_t i = 0; i < dag.size(); ++i) {
    auto v = find_variable(stats.variables(), dag.name(static_cast<int>(i)));
    if (!v) {
      throw Error(ErrorKind::UnknownVariable,
                  "no data column for node '" + dag.name(static_cast<int>(i)) + "'");
    }
    std::vector<int> parents;
    for (int p : dag.parents(static_cast<int>(i))) {
      auto pv = find_variable(stats.variables(), dag.name(p));
      if (!pv) throw Error(ErrorKind::UnknownVariable, "no data column for '" + dag.name(p) + "'");
      parents.push_back(*pv);
    }
    // Sorted, like ScoreCache, so both paths sum identical terms.
    std::sort(parents.begin(), parents.end());
    total += local_score(stats.count(*v, parents), kind, stats.rows());
  }
  return total;
}

double score(const Dag& dag, const DataTable& data, ScoreKind kind) {
  std::vector<std::string> names(dag.nodes().begin(), dag.nodes().end());
  return score(dag, SufficientStats(data.select_columns(names)), kind);
}

std::size_t ScoreCache::KeyHash::operator()(const std::vector<int>& key) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int v : key) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

ScoreCache::ScoreCache(const SufficientStats& stats, ScoreKind kind)
    : stats_(&stats), kind_(kind) {}

double ScoreCache::local(int node, std::span<const int> parents) {
  key_.assign(parents.begin(), parents.end());
  std::sort(key_.begin(), key_.end());
  key_.push_back(node);
  if (auto it = memo_.find(key_); it != memo_.end()) {
    ++hits_;
    return it->second;
  }
  ++misses_;
  // Scores are computed on the sorted parent order so the cached value does
  // not depend on which permutation was asked for first.
  std::span<const int> sorted(key_.data(), key_.size() - 1);
  const double value = local_score(stats_->count(node, sorted), kind_, stats_->rows());
  memo_.emplace(key_, value);
  return value;
}

}  // namespace beliefnet
