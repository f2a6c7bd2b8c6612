#include "beliefnet/infer/sample.hpp"

#include "beliefnet/util/random.hpp"

namespace beliefnet {

DataTable sample(const FittedNetwork& net, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t vars = net.size();
  std::vector<std::vector<int>> columns(vars, std::vector<int>(n));
  std::vector<int> row(vars);
  std::vector<int> parent_states;
  for (std::size_t r = 0; r < n; ++r) {
    for (int v : net.topological()) {
      const Cpt& cpt = net.cpt(v);
      parent_states.clear();
      for (int p : cpt.parents) parent_states.push_back(row[p]);
      const int j = configuration_index(parent_states, cpt.parent_cards);
      const double u = uniform01(rng);
      double cumulative = 0.0;
      int state = cpt.states() - 1;
      for (int k = 0; k < cpt.states(); ++k) {
        cumulative += cpt.table(j, k);
        if (u < cumulative) {
          state = k;
          break;
        }
      }
      // Guard against rounding in the cumulative sum landing on a zero entry.
      while (state > 0 && cpt.table(j, state) == 0.0) --state;
      row[v] = state;
    }
    for (std::size_t v = 0; v < vars; ++v) columns[v][r] = row[v];
  }
  return DataTable(net.variables(), std::move(columns));
}

}  // namespace beliefnet
