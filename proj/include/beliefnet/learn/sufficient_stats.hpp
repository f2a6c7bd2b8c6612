#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "beliefnet/core/variable.hpp"
#include "beliefnet/data/counts.hpp"
#include "beliefnet/data/data_table.hpp"
#include "beliefnet/util/random.hpp"

namespace beliefnet {

/// Complete-case rows compressed to distinct patterns with multiplicities.
///
/// Counting over patterns gives the same N_ijk as counting rows, and a
/// bootstrap replicate only changes the weights.
class SufficientStats {
 public:
  // Rows with any missing cell are dropped.
  explicit SufficientStats(const DataTable& table);

  const std::vector<Variable>& variables() const noexcept { return variables_; }
  std::size_t variable_count() const noexcept { return variables_.size(); }
  std::size_t patterns() const noexcept { return weights_.size(); }
  // Total weight (number of rows represented).
  std::int64_t rows() const noexcept { return rows_; }
  std::span<const std::int64_t> weights() const noexcept { return weights_; }
  int cardinality(int v) const { return variables_[v].cardinality(); }

  CountTable count(int variable, std::span<const int> parents) const;

  /// Nonparametric bootstrap: rows() draws with replacement from the
  /// original rows, expressed as new pattern weights.
  SufficientStats resample(Rng& rng) const;

 private:
  SufficientStats() = default;

  std::vector<Variable> variables_;
  // Pattern-major: pattern p occupies [p * variables, (p + 1) * variables).
  std::vector<std::uint8_t> cells_;
  std::vector<std::int64_t> weights_;
  // Pattern index of each original row, for resampling.
  std::vector<std::uint32_t> row_pattern_;
  std::int64_t rows_ = 0;
};

}  // namespace beliefnet
