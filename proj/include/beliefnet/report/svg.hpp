#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "beliefnet/analysis/scenario.hpp"
#include "beliefnet/analysis/sensitivity.hpp"

namespace beliefnet::report {

struct SvgOptions {
  // Written into a <metadata> element when set; leave empty for
  // byte-reproducible output.
  std::optional<std::string> timestamp;
};

std::string xml_escape(std::string_view text);

/// Grouped bars: one group per level of the target, one bar per scenario.
std::string scenario_svg(const std::vector<ScenarioRow>& rows, std::size_t target,
                         const SvgOptions& options = {});

/// Signed horizontal bars around zero, one per parameter, with separate
/// colors for increasing and decreasing the parameter.
std::string tornado_svg(const std::vector<TornadoBar>& bars, const TargetEvent& event,
                        double delta, const SvgOptions& options = {});

}  // namespace beliefnet::report
