#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "beliefnet/core/network.hpp"

namespace beliefnet {

/// Entry (row, state) of the CPT of `variable`; `row` is the parent
/// configuration index (last parent fastest).
struct CptParameterId {
  std::string variable;
  int row = 0;
  int state = 0;

  friend auto operator<=>(const CptParameterId&, const CptParameterId&) = default;
};

/// The event Y = state, optionally conditioned on evidence.
struct TargetEvent {
  std::string variable;
  std::string state;
  Evidence evidence;
};

/// P(event) on a fixed network. Throws like posterior().
double event_probability(const FittedNetwork& net, const TargetEvent& event);

/// Copy of `net` with the parameter set to `theta` in [0, 1] and the other
/// entries of its row scaled by (1 - theta) / (1 - theta0). Throws
/// SaturatedParameter when theta0 = 1 and theta != 1, InvalidArgument for
/// an out-of-range id or theta.
FittedNetwork with_parameter(const FittedNetwork& net, const CptParameterId& id, double theta);

double parameter_value(const FittedNetwork& net, const CptParameterId& id);

// "P(X=x | A=a, B=b)" style label of a parameter.
std::string parameter_label(const FittedNetwork& net, const CptParameterId& id);

/// dP(event)/dtheta under proportional co-variation.
///
/// Without evidence P(event) is linear in theta, so the slope is exact from
/// two evaluations (theta0 and theta0 +/- 0.25). With evidence the
/// probability is a ratio of linear functions and the slope is a central
/// finite difference (one-sided at the boundary); `finite_difference` is
/// then set in the result.
struct SlopeResult {
  double slope = 0.0;
  bool finite_difference = false;
};
SlopeResult sensitivity_slope(const FittedNetwork& net, const TargetEvent& event,
                              const CptParameterId& id);

/// Central difference (P(theta0 + eps) - P(theta0 - eps)) / (2 eps),
/// falling back to a one-sided difference when theta0 -/+ eps leaves [0, 1].
double finite_difference_slope(const FittedNetwork& net, const TargetEvent& event,
                               const CptParameterId& id, double eps = 1e-4);

/// One-way perturbation of a single parameter by +/- delta, clipped to [0, 1].
struct TornadoBar {
  CptParameterId id;
  std::string label;
  double theta = 0.0;
  double delta_up = 0.0;    // applied increase, >= 0
  double delta_down = 0.0;  // applied decrease, <= 0
  double shift_up = 0.0;    // P(event) change for the increase
  double shift_down = 0.0;  // P(event) change for the decrease
  // +1 if raising the parameter raises P(event), -1 if it lowers it, 0 if flat.
  int direction = 0;

  double magnitude() const;
};

struct TornadoOptions {
  double delta = 0.1;
  // Empty means every proper ancestor of the target (and of any evidence).
  std::vector<std::string> nodes;
  int workers = 1;
};

/// Bars for every parameter of the node set, sorted by max |shift|
/// descending, ties by parameter id. Parameters with theta = 1 cannot be
/// co-varied and are skipped. Throws InvalidArgument for delta <= 0.
std::vector<TornadoBar> tornado(const FittedNetwork& net, const TargetEvent& event,
                                const TornadoOptions& options = {});

/// Max |slope| over each node's parameters; 0 for the target, nodes that are
/// not ancestors of it, and nodes whose parameters have no effect.
std::map<std::string, double> node_influence(const FittedNetwork& net,
                                             const TargetEvent& event, int workers = 1);

/// Fill colors for export_dot: exact zeros are gray, others are shaded
/// linearly from white (0) to full red (the largest influence).
std::map<std::string, std::string> influence_colors(
    const std::map<std::string, double>& influence);

}  // namespace beliefnet
