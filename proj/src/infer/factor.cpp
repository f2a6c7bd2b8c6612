#include "beliefnet/infer/factor.hpp"

#include <algorithm>

#include "beliefnet/core/error.hpp"
#include "beliefnet/core/network.hpp"

namespace beliefnet {
namespace {

std::vector<Eigen::Index> strides_of(const std::vector<int>& cards) {
  std::vector<Eigen::Index> strides(cards.size());
  Eigen::Index s = 1;
  for (std::size_t i = cards.size(); i-- > 0;) {
    strides[i] = s;
    s *= cards[i];
  }
  return strides;
}

Eigen::Index volume(const std::vector<int>& cards) {
  Eigen::Index v = 1;
  for (int c : cards) v *= c;
  return v;
}

// Stride of `var` within a factor's layout, 0 when the factor lacks it.
Eigen::Index stride_in(const std::vector<int>& scope,
                       const std::vector<Eigen::Index>& strides, int var) {
  auto it = std::find(scope.begin(), scope.end(), var);
  return it == scope.end() ? 0 : strides[it - scope.begin()];
}

}  // namespace

Factor::Factor(std::vector<int> scope, std::vector<int> cards, Eigen::VectorXd values)
    : scope_(std::move(scope)), cards_(std::move(cards)), values_(std::move(values)) {
  if (scope_.size() != cards_.size() || values_.size() != volume(cards_)) {
    throw Error(ErrorKind::InvalidArgument, "factor shape mismatch");
  }
}

Factor Factor::from_cpt(const FittedNetwork& net, int node) {
  const Cpt& cpt = net.cpt(node);
  std::vector<int> scope = cpt.parents;
  std::vector<int> cards = cpt.parent_cards;
  scope.push_back(node);
  cards.push_back(cpt.states());
  // Row-major CPT storage is already (parent configuration, state) order.
  Eigen::VectorXd values =
      Eigen::Map<const Eigen::VectorXd>(cpt.table.data(), cpt.table.size());
  return Factor(std::move(scope), std::move(cards), std::move(values));
}

bool Factor::contains(int var) const {
  return std::find(scope_.begin(), scope_.end(), var) != scope_.end();
}

Factor operator*(const Factor& a, const Factor& b) {
  std::vector<int> scope = a.scope_;
  std::vector<int> cards = a.cards_;
  for (std::size_t i = 0; i < b.scope_.size(); ++i) {
    if (!a.contains(b.scope_[i])) {
      scope.push_back(b.scope_[i]);
      cards.push_back(b.cards_[i]);
    }
  }
  const auto sa = strides_of(a.cards_);
  const auto sb = strides_of(b.cards_);
  const std::size_t d = scope.size();
  std::vector<Eigen::Index> step_a(d), step_b(d);
  for (std::size_t i = 0; i < d; ++i) {
    step_a[i] = stride_in(a.scope_, sa, scope[i]);
    step_b[i] = stride_in(b.scope_, sb, scope[i]);
  }
  Eigen::VectorXd values(volume(cards));
  std::vector<int> state(d, 0);
  Eigen::Index ia = 0;
  Eigen::Index ib = 0;
  for (Eigen::Index out = 0; out < values.size(); ++out) {
    values[out] = a.values_[ia] * b.values_[ib];
    // Odometer increment, last variable fastest.
    for (std::size_t i = d; i-- > 0;) {
      if (++state[i] < cards[i]) {
        ia += step_a[i];
        ib += step_b[i];
        break;
      }
      state[i] = 0;
      ia -= step_a[i] * (cards[i] - 1);
      ib -= step_b[i] * (cards[i] - 1);
    }
  }
  return Factor(std::move(scope), std::move(cards), std::move(values));
}

Factor Factor::sum_out(int var) const {
  auto it = std::find(scope_.begin(), scope_.end(), var);
  if (it == scope_.end()) return *this;
  const std::size_t pos = it - scope_.begin();
  const auto strides = strides_of(cards_);
  const Eigen::Index inner = strides[pos];
  const Eigen::Index card = cards_[pos];
  const Eigen::Index outer = values_.size() / (inner * card);
  std::vector<int> scope = scope_;
  std::vector<int> cards = cards_;
  scope.erase(scope.begin() + static_cast<long>(pos));
  cards.erase(cards.begin() + static_cast<long>(pos));
  Eigen::VectorXd values = Eigen::VectorXd::Zero(outer * inner);
  for (Eigen::Index o = 0; o < outer; ++o) {
    for (Eigen::Index k = 0; k < card; ++k) {
      values.segment(o * inner, inner) += values_.segment((o * card + k) * inner, inner);
    }
  }
  return Factor(std::move(scope), std::move(cards), std::move(values));
}

Factor Factor::reduce(int var, int state) const {
  auto it = std::find(scope_.begin(), scope_.end(), var);
  if (it == scope_.end()) return *this;
  const std::size_t pos = it - scope_.begin();
  const auto strides = strides_of(cards_);
  const Eigen::Index inner = strides[pos];
  const Eigen::Index card = cards_[pos];
  const Eigen::Index outer = values_.size() / (inner * card);
  std::vector<int> scope = scope_;
  std::vector<int> cards = cards_;
  scope.erase(scope.begin() + static_cast<long>(pos));
  cards.erase(cards.begin() + static_cast<long>(pos));
  Eigen::VectorXd values(outer * inner);
  for (Eigen::Index o = 0; o < outer; ++o) {
    values.segment(o * inner, inner) = values_.segment((o * card + state) * inner, inner);
  }
  return Factor(std::move(scope), std::move(cards), std::move(values));
}

Factor Factor::reordered(const std::vector<int>& order) const {
  if (order.size() != scope_.size()) {
    throw Error(ErrorKind::InvalidArgument, "reordered: not a permutation of the scope");
  }
  std::vector<int> cards;
  for (int v : order) {
    auto it = std::find(scope_.begin(), scope_.end(), v);
    if (it == scope_.end()) {
      throw Error(ErrorKind::InvalidArgument, "reordered: not a permutation of the scope");
    }
    cards.push_back(cards_[it - scope_.begin()]);
  }
  // Multiplying by the unit factor over `order` lays values out in that order.
  Factor unit(order, cards, Eigen::VectorXd::Ones(volume(cards)));
  Factor product = unit * *this;
  return product;
}

}  // namespace beliefnet
