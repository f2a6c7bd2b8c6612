#include "beliefnet/learn/sufficient_stats.hpp"

#include <map>

#include "beliefnet/core/error.hpp"
#include "beliefnet/core/network.hpp"

namespace beliefnet {

SufficientStats::SufficientStats(const DataTable& table)
    : variables_(table.variables()) {
  const std::size_t n = variables_.size();
  for (const auto& v : variables_) {
    if (v.cardinality() > 255) {
      throw Error(ErrorKind::InvalidArgument,
                  "variable '" + v.name() + "' has more than 255 levels");
    }
  }
  std::map<std::vector<std::uint8_t>, std::uint32_t> index;
  std::vector<std::uint8_t> key(n);
  for (std::size_t r = 0; r < table.rows(); ++r) {
    bool complete = true;
    for (std::size_t c = 0; c < n; ++c) {
      const int v = table.value(r, static_cast<int>(c));
      if (v == kMissing) {
        complete = false;
        break;
      }
      key[c] = static_cast<std::uint8_t>(v);
    }
    if (!complete) continue;
    auto [it, inserted] = index.try_emplace(key, static_cast<std::uint32_t>(weights_.size()));
    if (inserted) {
      cells_.insert(cells_.end(), key.begin(), key.end());
      weights_.push_back(0);
    }
    ++weights_[it->second];
    row_pattern_.push_back(it->second);
    ++rows_;
  }
}

CountTable SufficientStats::count(int variable, std::span<const int> parents) const {
  CountTable out;
  out.variable = variable;
  out.parents.assign(parents.begin(), parents.end());
  for (int p : parents) out.parent_cards.push_back(cardinality(p));
  const int q = configuration_count(out.parent_cards);
  out.counts = CountMatrix::Zero(q, cardinality(variable));
  const std::size_t n = variables_.size();
  for (std::size_t p = 0; p < weights_.size(); ++p) {
    const std::int64_t w = weights_[p];
    if (w == 0) continue;
    const std::uint8_t* row = &cells_[p * n];
    int j = 0;
    for (std::size_t i = 0; i < parents.size(); ++i) {
      j = j * out.parent_cards[i] + row[parents[i]];
    }
    out.counts(j, row[variable]) += w;
  }
  return out;
}

SufficientStats SufficientStats::resample(Rng& rng) const {
  SufficientStats out;
  out.variables_ = variables_;
  out.cells_ = cells_;
  out.row_pattern_ = row_pattern_;
  out.rows_ = rows_;
  out.weights_.assign(weights_.size(), 0);
  const auto n = static_cast<std::uint64_t>(row_pattern_.size());
  for (std::uint64_t i = 0; i < n; ++i) {
    ++out.weights_[row_pattern_[uniform_index(rng, n)]];
  }
  return out;
}

}  // namespace beliefnet
