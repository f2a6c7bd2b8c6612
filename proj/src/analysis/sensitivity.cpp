#include "beliefnet/analysis/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "beliefnet/core/error.hpp"
#include "beliefnet/infer/elimination.hpp"
#include "beliefnet/util/parallel.hpp"

namespace beliefnet {
namespace {

const Cpt& checked_cpt(const FittedNetwork& net, const CptParameterId& id) {
  const Cpt& cpt = net.cpt(net.index_of(id.variable));
  if (id.row < 0 || id.row >= cpt.rows() || id.state < 0 || id.state >= cpt.states()) {
    throw Error(ErrorKind::InvalidArgument,
                "parameter (" + std::to_string(id.row) + ", " + std::to_string(id.state) +
                    ") out of range for '" + id.variable + "'");
  }
  return cpt;
}

// Nodes whose parameters can change P(event): ancestors of the target and of
// the evidence, excluding the target itself.
std::vector<int> relevant_nodes(const FittedNetwork& net, const TargetEvent& event) {
  const int target = net.index_of(event.variable);
  std::vector<int> roots{target};
  for (const auto& [name, level] : event.evidence.assignments()) {
    roots.push_back(net.index_of(name));
  }
  std::vector<int> nodes = ancestors(net.dag(), roots);
  for (std::size_t i = 1; i < roots.size(); ++i) nodes.push_back(roots[i]);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::erase(nodes, target);
  return nodes;
}

std::vector<CptParameterId> parameters_of(const FittedNetwork& net, int node) {
  std::vector<CptParameterId> ids;
  const Cpt& cpt = net.cpt(node);
  for (int j = 0; j < cpt.rows(); ++j) {
    for (int k = 0; k < cpt.states(); ++k) ids.push_back({net.variable(node).name(), j, k});
  }
  return ids;
}

bool saturated(const FittedNetwork& net, const CptParameterId& id) {
  return parameter_value(net, id) >= 1.0;
}

}  // namespace

double event_probability(const FittedNetwork& net, const TargetEvent& event) {
  const int target = net.index_of(event.variable);
  const int state = net.variable(target).level_index(event.state);
  return posterior(net, event.variable, event.evidence).distribution[state];
}

double parameter_value(const FittedNetwork& net, const CptParameterId& id) {
  return checked_cpt(net, id).table(id.row, id.state);
}

FittedNetwork with_parameter(const FittedNetwork& net, const CptParameterId& id, double theta) {
  const Cpt& cpt = checked_cpt(net, id);
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "parameter value outside [0, 1]");
  }
  ProbabilityMatrix table = cpt.table;
  auto row = table.row(id.row);
  const double others = row.sum() - row[id.state];
  if (others <= 0.0) {
    if (theta == row[id.state]) return net;
    throw Error(ErrorKind::SaturatedParameter,
                parameter_label(net, id) + " is 1; proportional co-variation is undefined");
  }
  const double scale = (1.0 - theta) / others;
  for (int k = 0; k < cpt.states(); ++k) {
    row[k] = k == id.state ? theta : row[k] * scale;
  }
  return net.with_table(net.index_of(id.variable), std::move(table));
}

std::string parameter_label(const FittedNetwork& net, const CptParameterId& id) {
  const Cpt& cpt = checked_cpt(net, id);
  const Variable& v = net.variable(cpt.node);
  std::string label = "P(" + v.name() + "=" + v.level(id.state);
  const auto states = configuration_states(id.row, cpt.parent_cards);
  for (std::size_t p = 0; p < cpt.parents.size(); ++p) {
    const Variable& parent = net.variable(cpt.parents[p]);
    label += p == 0 ? " | " : ", ";
    label += parent.name() + "=" + parent.level(states[p]);
  }
  return label + ")";
}

double finite_difference_slope(const FittedNetwork& net, const TargetEvent& event,
                               const CptParameterId& id, double eps) {
  if (!(eps > 0.0)) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
  const double theta = parameter_value(net, id);
  const double lo = std::max(0.0, theta - eps);
  const double hi = std::min(1.0, theta + eps);
  const double p_lo = lo == theta ? event_probability(net, event)
                                  : event_probability(with_parameter(net, id, lo), event);
  const double p_hi = event_probability(with_parameter(net, id, hi), event);
  return (p_hi - p_lo) / (hi - lo);
}

SlopeResult sensitivity_slope(const FittedNetwork& net, const TargetEvent& event,
                              const CptParameterId& id) {
  const double theta = parameter_value(net, id);
  if (!event.evidence.empty()) return {finite_difference_slope(net, event, id), true};
  const double other = theta <= 0.5 ? theta + 0.25 : theta - 0.25;
  const double p0 = event_probability(net, event);
  const double p1 = event_probability(with_parameter(net, id, other), event);
  return {(p1 - p0) / (other - theta), false};
}

double TornadoBar::magnitude() const {
  return std::max(std::abs(shift_up), std::abs(shift_down));
}

std::vector<TornadoBar> tornado(const FittedNetwork& net, const TargetEvent& event,
                                const TornadoOptions& options) {
  if (!(options.delta > 0.0)) throw Error(ErrorKind::InvalidArgument, "delta must be positive");
  std::vector<int> nodes;
  if (options.nodes.empty()) {
    nodes = relevant_nodes(net, event);
  } else {
    for (const auto& name : options.nodes) nodes.push_back(net.index_of(name));
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  }
  std::vector<CptParameterId> ids;
  for (int node : nodes) {
    for (auto& id : parameters_of(net, node)) {
      if (!saturated(net, id)) ids.push_back(std::move(id));
    }
  }

  const double base = event_probability(net, event);
  std::vector<TornadoBar> bars(ids.size());
  parallel_for(ids.size(), options.workers, [&](std::size_t i) {
    TornadoBar bar;
    bar.id = ids[i];
    bar.label = parameter_label(net, bar.id);
    bar.theta = parameter_value(net, bar.id);
    const double up = std::min(1.0, bar.theta + options.delta);
    const double down = std::max(0.0, bar.theta - options.delta);
    bar.delta_up = up - bar.theta;
    bar.delta_down = down - bar.theta;
    if (bar.delta_up != 0.0) {
      bar.shift_up = event_probability(with_parameter(net, bar.id, up), event) - base;
    }
    if (bar.delta_down != 0.0) {
      bar.shift_down = event_probability(with_parameter(net, bar.id, down), event) - base;
    }
    const double trend = bar.delta_up != 0.0 ? bar.shift_up : -bar.shift_down;
    bar.direction = trend > 0.0 ? 1 : (trend < 0.0 ? -1 : 0);
    bars[i] = std::move(bar);
  });

  std::stable_sort(bars.begin(), bars.end(), [](const TornadoBar& a, const TornadoBar& b) {
    const double ma = a.magnitude();
    const double mb = b.magnitude();
    if (ma != mb) return ma > mb;
    return a.id < b.id;
  });
  return bars;
}

std::map<std::string, double> node_influence(const FittedNetwork& net,
                                             const TargetEvent& event, int workers) {
  std::map<std::string, double> influence;
  for (const auto& v : net.variables()) influence[v.name()] = 0.0;

  std::vector<CptParameterId> ids;
  for (int node : relevant_nodes(net, event)) {
    for (auto& id : parameters_of(net, node)) {
      if (!saturated(net, id)) ids.push_back(std::move(id));
    }
  }
  std::vector<double> slopes(ids.size());
  parallel_for(ids.size(), workers, [&](std::size_t i) {
    slopes[i] = std::abs(sensitivity_slope(net, event, ids[i]).slope);
  });
  for (std::size_t i = 0; i < ids.size(); ++i) {
    double& v = influence[ids[i].variable];
    v = std::max(v, slopes[i]);
  }
  return influence;
}

std::map<std::string, std::string> influence_colors(
    const std::map<std::string, double>& influence) {
  double peak = 0.0;
  for (const auto& [name, v] : influence) peak = std::max(peak, v);
  // White (255, 255, 255) to red (203, 24, 29).
  constexpr int kTo[3] = {203, 24, 29};
  std::map<std::string, std::string> colors;
  for (const auto& [name, v] : influence) {
    if (v == 0.0 || peak == 0.0) {
      colors[name] = "#d3d3d3";
      continue;
    }
    const double f = v / peak;
    char buf[8];
    int rgb[3];
    for (int c = 0; c < 3; ++c) {
      rgb[c] = static_cast<int>(std::lround(255.0 + f * (kTo[c] - 255.0)));
    }
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
    colors[name] = buf;
  }
  return colors;
}

}  // namespace beliefnet
