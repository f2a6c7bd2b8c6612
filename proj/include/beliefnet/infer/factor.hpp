#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace beliefnet {

class FittedNetwork;

/// Nonnegative table over the joint states of a scope of variables.
///
/// Entries are laid out row-major over the scope: the last variable varies
/// fastest. A factor with an empty scope holds one value.
class Factor {
 public:
  Factor() : values_(Eigen::VectorXd::Ones(1)) {}
  Factor(std::vector<int> scope, std::vector<int> cards, Eigen::VectorXd values);

  // The CPT of `node` as a factor over (parents..., node).
  static Factor from_cpt(const FittedNetwork& net, int node);

  const std::vector<int>& scope() const noexcept { return scope_; }
  const std::vector<int>& cards() const noexcept { return cards_; }
  const Eigen::VectorXd& values() const noexcept { return values_; }
  Eigen::VectorXd& values() noexcept { return values_; }
  Eigen::Index size() const noexcept { return values_.size(); }

  bool contains(int var) const;
  double total() const { return values_.sum(); }

  Factor sum_out(int var) const;
  // Fixes `var` to `state` and drops it from the scope.
  Factor reduce(int var, int state) const;
  // Same values with the scope permuted into `order` (a permutation of scope()).
  Factor reordered(const std::vector<int>& order) const;

  friend Factor operator*(const Factor& a, const Factor& b);

 private:
  std::vector<int> scope_;
  std::vector<int> cards_;
  Eigen::VectorXd values_;
};

}  // namespace beliefnet
