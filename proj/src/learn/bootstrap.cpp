#include "beliefnet/learn/bootstrap.hpp"

#include <cmath>

#include "beliefnet/core/error.hpp"
#include "beliefnet/data/csv.hpp"
#include "beliefnet/util/format.hpp"
#include "beliefnet/util/parallel.hpp"

namespace beliefnet {

double ArcStrengthTable::strength(int a, int b) const {
  if (replicates == 0) return 0.0;
  return static_cast<double>(directed_counts(a, b) + directed_counts(b, a)) / replicates;
}

double ArcStrengthTable::direction(int a, int b) const {
  const int both = directed_counts(a, b) + directed_counts(b, a);
  if (both == 0) return 0.0;
  return static_cast<double>(directed_counts(a, b)) / both;
}

double ArcStrengthTable::arc_frequency(int a, int b) const {
  if (replicates == 0) return 0.0;
  return static_cast<double>(directed_counts(a, b)) / replicates;
}

int ArcStrengthTable::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] == name) return static_cast<int>(i);
  }
  throw Error(ErrorKind::UnknownVariable, "no node '" + name + "' in strength table");
}

void ArcStrengthTable::add(const Dag& dag) {
  if (dag.nodes() != nodes) {
    throw Error(ErrorKind::InvalidArgument, "DAG nodes differ from strength table");
  }
  for (const auto& arc : dag.arcs()) ++directed_counts(arc.from, arc.to);
  ++replicates;
}

void ArcStrengthTable::merge(const ArcStrengthTable& other) {
  if (other.nodes != nodes) {
    throw Error(ErrorKind::InvalidArgument, "strength tables over different nodes");
  }
  directed_counts += other.directed_counts;
  replicates += other.replicates;
}

std::vector<double> ArcStrengthTable::pair_strengths() const {
  std::vector<double> out;
  const int n = static_cast<int>(size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) out.push_back(strength(a, b));
  }
  return out;
}

ArcStrengthTable empty_strengths(std::vector<std::string> nodes) {
  ArcStrengthTable t;
  const auto n = static_cast<Eigen::Index>(nodes.size());
  t.nodes = std::move(nodes);
  t.directed_counts = Eigen::MatrixXi::Zero(n, n);
  return t;
}

ArcStrengthTable bootstrap_strengths(const DataTable& data, const Constraints& constraints,
                                     const BootstrapConfig& config) {
  if (config.replicates < 1) {
    throw Error(ErrorKind::InvalidArgument, "bootstrap needs at least one replicate");
  }
  validate(config.tabu);
  const SufficientStats stats(data);
  std::vector<std::string> names;
  for (const auto& v : data.variables()) names.push_back(v.name());
  check_constraints(constraints, names);

  std::vector<Dag> dags(static_cast<std::size_t>(config.replicates));
  parallel_for(dags.size(), config.workers, [&](std::size_t r) {
    try {
      Rng rng(derive_seed(config.seed, 2 * r));
      const SufficientStats replicate = stats.resample(rng);
      TabuConfig tabu = config.tabu;
      tabu.seed = derive_seed(config.seed, 2 * r + 1);
      dags[r] = tabu_search(replicate, config.score, constraints, tabu).dag;
    } catch (const Error& e) {
      throw Error(e.kind(), "replicate " + std::to_string(r) + ": " + e.what(), r);
    }
  });

  ArcStrengthTable table = empty_strengths(names);
  for (const auto& dag : dags) table.add(dag);
  return table;
}

std::string strengths_csv(const ArcStrengthTable& table) {
  std::string text = "from,to,strength,direction,arc_frequency\n";
  const int n = static_cast<int>(table.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      text += csv::join({table.nodes[a], table.nodes[b], format_number(table.strength(a, b)),
                         format_number(table.direction(a, b)),
                         format_number(table.arc_frequency(a, b))});
      text += "\n";
    }
  }
  return text;
}

ArcStrengthTable parse_strengths_csv(std::string_view text, int replicates) {
  auto records = csv::parse(text);
  if (records.empty() || records.front().size() < 5) {
    throw Error(ErrorKind::MalformedFile, "strength CSV needs a 5-column header");
  }
  std::vector<std::string> nodes;
  auto node_index = [&](const std::string& name) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i] == name) return static_cast<int>(i);
    }
    nodes.push_back(name);
    return static_cast<int>(nodes.size() - 1);
  };
  struct Row {
    int from, to;
    double frequency;
  };
  std::vector<Row> rows;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != 5) throw Error(ErrorKind::RaggedRow, "strength row " + std::to_string(r), r);
    const int from = node_index(rec[0]);
    const int to = node_index(rec[1]);
    rows.push_back({from, to, std::stod(rec[4])});
  }
  ArcStrengthTable table = empty_strengths(nodes);
  table.replicates = replicates;
  for (const auto& row : rows) {
    table.directed_counts(row.from, row.to) =
        static_cast<int>(std::lround(row.frequency * replicates));
  }
  return table;
}

}  // namespace beliefnet
