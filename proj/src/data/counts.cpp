#include "beliefnet/data/counts.hpp"

#include "beliefnet/core/error.hpp"
#include "beliefnet/core/network.hpp"

namespace beliefnet {

CountTable counts(const DataTable& table, int variable, const std::vector<int>& parents) {
  CountTable out;
  out.variable = variable;
  out.parents = parents;
  for (int p : parents) out.parent_cards.push_back(table.variable(p).cardinality());
  const int q = configuration_count(out.parent_cards);
  out.counts = CountMatrix::Zero(q, table.variable(variable).cardinality());

  auto child = table.column(variable);
  std::vector<std::span<const int>> cols;
  for (int p : parents) cols.push_back(table.column(p));
  for (std::size_t r = 0; r < table.rows(); ++r) {
    if (child[r] == kMissing) continue;
    int j = 0;
    bool complete = true;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const int s = cols[i][r];
      if (s == kMissing) {
        complete = false;
        break;
      }
      j = j * out.parent_cards[i] + s;
    }
    if (complete) ++out.counts(j, child[r]);
  }
  return out;
}

CountTable counts(const DataTable& table, const std::string& variable,
                  const std::vector<std::string>& parents) {
  std::vector<int> idx;
  for (const auto& p : parents) idx.push_back(table.index_of(p));
  return counts(table, table.index_of(variable), idx);
}

CountTable marginalize_parent(const CountTable& table, std::size_t parent_position) {
  if (parent_position >= table.parents.size()) {
    throw Error(ErrorKind::InvalidArgument, "parent position out of range");
  }
  CountTable out;
  out.variable = table.variable;
  for (std::size_t i = 0; i < table.parents.size(); ++i) {
    if (i == parent_position) continue;
    out.parents.push_back(table.parents[i]);
    out.parent_cards.push_back(table.parent_cards[i]);
  }
  out.counts = CountMatrix::Zero(configuration_count(out.parent_cards), table.states());
  for (int j = 0; j < table.configurations(); ++j) {
    auto states = configuration_states(j, table.parent_cards);
    states.erase(states.begin() + static_cast<long>(parent_position));
    out.counts.row(configuration_index(states, out.parent_cards)) += table.counts.row(j);
  }
  return out;
}

}  // namespace beliefnet
