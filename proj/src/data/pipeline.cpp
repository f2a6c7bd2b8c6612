#include <algorithm>

#include "beliefnet/core/error.hpp"
#include "beliefnet/data/pipeline.hpp"

namespace beliefnet {

DataTable collapse_rare(const DataTable& table, const std::string& variable,
                        int min_count) {
  const int c = table.index_of(variable);
  const Variable& var = table.variable(c);
  std::vector<long> counts(var.cardinality(), 0);
  for (int v : table.column(c)) {
    if (v != kMissing) ++counts[v];
  }
  std::vector<int> remap(var.cardinality(), kMissing);
  std::vector<std::string> kept;
  for (int k = 0; k < var.cardinality(); ++k) {
    if (counts[k] >= min_count) {
      remap[k] = static_cast<int>(kept.size());
      kept.push_back(var.level(k));
    }
  }
  if (kept.size() == var.levels().size()) return table;
  if (kept.size() < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "collapsing rare levels of '" + variable + "' leaves " +
                    std::to_string(kept.size()) + " level(s)");
  }
  std::vector<int> column;
  column.reserve(table.rows());
  for (int v : table.column(c)) column.push_back(v == kMissing ? kMissing : remap[v]);
  return table.with_replaced_column(c, Variable(var.name(), std::move(kept), var.ordinal()),
                                    std::move(column));
}

DataTable drop_incomplete(const DataTable& table,
                          const std::vector<std::string>& variables) {
  std::vector<int> cols;
  for (const auto& name : variables) cols.push_back(table.index_of(name));
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r < table.rows(); ++r) {
    bool complete = std::none_of(cols.begin(), cols.end(),
                                 [&](int c) { return table.is_missing(r, c); });
    if (complete) keep.push_back(r);
  }
  return table.select_rows(keep);
}

DataTable group_themes(const DataTable& table, const std::vector<ThemeSpec>& specs) {
  DataTable out = table;
  std::vector<std::string> members_to_drop;
  for (const auto& spec : specs) {
    struct Member {
      int column;
      int mentioned;
    };
    std::vector<Member> members;
    for (const auto& name : spec.members) {
      const int c = table.index_of(name);
      const Variable& v = table.variable(c);
      auto mentioned = v.find_level(kMentioned);
      if (v.cardinality() != 2 || !mentioned || !v.find_level(kNotMentioned)) {
        throw Error(ErrorKind::NonBinaryMember,
                    "theme '" + spec.name + "': member '" + name +
                        "' is not a Mentioned/Not mentioned indicator");
      }
      members.push_back({c, *mentioned});
      members_to_drop.push_back(name);
    }
    Variable theme(spec.name, {kMentioned, kNotMentioned});
    std::vector<int> column(table.rows(), kMissing);
    for (std::size_t r = 0; r < table.rows(); ++r) {
      bool any_missing = false;
      bool any_mentioned = false;
      for (const auto& m : members) {
        const int v = table.value(r, m.column);
        if (v == kMissing) {
          any_missing = true;
        } else if (v == m.mentioned) {
          any_mentioned = true;
        }
      }
      if (any_mentioned) {
        column[r] = 0;
      } else if (!any_missing && !members.empty()) {
        column[r] = 1;
      }
    }
    out = out.with_column(std::move(theme), std::move(column));
  }
  std::sort(members_to_drop.begin(), members_to_drop.end());
  members_to_drop.erase(std::unique(members_to_drop.begin(), members_to_drop.end()),
                        members_to_drop.end());
  return out.drop_columns(members_to_drop);
}

std::pair<DataTable, DataTable> split_population(const DataTable& table,
                                                 const FramingLevels& framing) {
  const int c = table.index_of(framing.variable);
  const Variable& v = table.variable(c);
  const int risk = v.level_index(framing.risk);
  const int opportunity = v.level_index(framing.opportunity);
  const int both = v.level_index(framing.both);
  std::vector<std::size_t> risk_rows;
  std::vector<std::size_t> opportunity_rows;
  for (std::size_t r = 0; r < table.rows(); ++r) {
    const int x = table.value(r, c);
    if (x == risk || x == both) risk_rows.push_back(r);
    if (x == opportunity || x == both) opportunity_rows.push_back(r);
  }
  return {table.select_rows(risk_rows), table.select_rows(opportunity_rows)};
}

}  // namespace beliefnet
