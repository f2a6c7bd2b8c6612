#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "beliefnet/data/data_table.hpp"

namespace beliefnet {

using CountMatrix =
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Sufficient statistics N_ijk of one variable given a parent set.
///
/// Row j is the parent configuration (mixed radix, last parent fastest, see
/// configuration_index); column k the variable's state. Every configuration
/// has a row, observed or not.
struct CountTable {
  int variable = 0;
  std::vector<int> parents;
  std::vector<int> parent_cards;
  CountMatrix counts;

  int configurations() const { return static_cast<int>(counts.rows()); }
  int states() const { return static_cast<int>(counts.cols()); }
  // N_ij.
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> row_totals() const {
    return counts.rowwise().sum();
  }
  std::int64_t total() const { return counts.sum(); }
};

/// Tallies the rows where the variable and all parents are observed.
CountTable counts(const DataTable& table, int variable, const std::vector<int>& parents);
CountTable counts(const DataTable& table, const std::string& variable,
                  const std::vector<std::string>& parents);

/// Sums out parent at position `parent_position` of the parent list.
CountTable marginalize_parent(const CountTable& table, std::size_t parent_position);

}  // namespace beliefnet
