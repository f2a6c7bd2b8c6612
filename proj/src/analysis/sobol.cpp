#include "beliefnet/analysis/sobol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "beliefnet/core/error.hpp"
#include "beliefnet/infer/elimination.hpp"
#include "beliefnet/util/parallel.hpp"

namespace beliefnet {

SobolResult sobol_first_order(const FittedNetwork& net, const std::string& target,
                              const std::string& input) {
  const int y = net.index_of(target);
  const int x = net.index_of(input);
  if (x == y) throw Error(ErrorKind::InvalidArgument, "Sobol input equals the target");
  const int ry = net.variable(y).cardinality();
  const int rx = net.variable(x).cardinality();

  SobolResult result{target, input, Eigen::VectorXd::Zero(ry), 0.0};

  // Joint P(X, Y) with X as rows, Y as columns.
  const std::vector<int> none(net.size(), kUnobserved);
  const JointQuery q = joint_posterior(net, {x, y}, none);
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      joint(q.joint.values().data(), rx, ry);
  const Eigen::VectorXd px = joint.rowwise().sum();
  const Eigen::VectorXd py = joint.colwise().sum().transpose();

  const Eigen::VectorXd var_y = py.array() * (1.0 - py.array());
  if ((var_y.array() <= 0.0).all()) {
    throw Error(ErrorKind::DegenerateTarget, "target '" + target + "' has no variance");
  }
  const std::vector<int> given;
  if (d_separated(net.dag(), x, y, given)) return result;

  double explained = 0.0;
  double total = 0.0;
  for (int k = 0; k < ry; ++k) {
    if (var_y[k] <= 0.0) continue;
    double v = 0.0;
    for (int s = 0; s < rx; ++s) {
      if (px[s] <= 0.0) continue;
      const double conditional = joint(s, k) / px[s];
      v += px[s] * (conditional - py[k]) * (conditional - py[k]);
    }
    result.per_state[k] = v / var_y[k];
    explained += v;
    total += var_y[k];
  }
  result.aggregate = explained / total;
  return result;
}

SobolMatrix sobol_matrix(const FittedNetwork& net, const std::vector<std::string>& targets,
                         std::vector<std::string> inputs, int workers) {
  if (inputs.empty()) {
    for (const auto& v : net.variables()) inputs.push_back(v.name());
  }
  for (const auto& t : targets) net.index_of(t);
  for (const auto& i : inputs) net.index_of(i);

  const auto rows = static_cast<Eigen::Index>(inputs.size());
  const auto cols = static_cast<Eigen::Index>(targets.size());
  Eigen::MatrixXd percent(rows, cols);
  parallel_for(static_cast<std::size_t>(rows * cols), workers, [&](std::size_t cell) {
    const auto r = static_cast<Eigen::Index>(cell) / cols;
    const auto c = static_cast<Eigen::Index>(cell) % cols;
    if (inputs[r] == targets[c]) {
      percent(r, c) = std::numeric_limits<double>::quiet_NaN();
    } else {
      percent(r, c) = 100.0 * sobol_first_order(net, targets[c], inputs[r]).aggregate;
    }
  });

  std::vector<Eigen::Index> order(static_cast<std::size_t>(rows));
  std::iota(order.begin(), order.end(), 0);
  if (cols > 0) {
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
      const double va = percent(a, 0);
      const double vb = percent(b, 0);
      if (std::isnan(va) != std::isnan(vb)) return std::isnan(vb);
      if (!std::isnan(va) && va != vb) return va > vb;
      return inputs[a] < inputs[b];
    });
  }
  SobolMatrix out;
  out.targets = targets;
  out.percent.resize(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    out.inputs.push_back(inputs[order[i]]);
    out.percent.row(i) = percent.row(order[i]);
  }
  return out;
}

}  // namespace beliefnet
