#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace beliefnet {

struct Arc {
  int from = 0;
  int to = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Directed graph over named nodes with ordered parent lists.
///
/// Arcs may be added freely (self-loops and duplicates are rejected) so that
/// callers can build and then validate arbitrary graphs; acyclicity is
/// checked by topological_order() and enforced by FittedNetwork.
class Dag {
 public:
  Dag() = default;
  explicit Dag(std::vector<std::string> nodes);

  // Builds a graph from a node -> parents map; parent order is preserved.
  static Dag from_parents(
      std::vector<std::string> nodes,
      const std::map<std::string, std::vector<std::string>>& parents);

  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<std::string>& nodes() const noexcept { return nodes_; }
  const std::string& name(int node) const { return nodes_.at(node); }

  std::optional<int> find(std::string_view name) const;
  // Throws UnknownVariable.
  int index_of(std::string_view name) const;

  const std::vector<int>& parents(int node) const { return parents_.at(node); }
  std::vector<int> children(int node) const;

  bool has_arc(int from, int to) const;
  bool has_arc(std::string_view from, std::string_view to) const;
  void add_arc(int from, int to);
  void add_arc(std::string_view from, std::string_view to);
  void remove_arc(int from, int to);
  void reverse_arc(int from, int to);

  // True when a directed path from -> ... -> to exists (from == to counts).
  bool reachable(int from, int to) const;

  // Arcs sorted by (from, to).
  std::vector<Arc> arcs() const;
  std::size_t arc_count() const;

  // Sorts every parent list by node index.
  void canonicalize();

  friend bool operator==(const Dag&, const Dag&) = default;

 private:
  std::vector<std::string> nodes_;
  std::vector<std::vector<int>> parents_;
  std::unordered_map<std::string, int> index_;
};

// Parents precede children. Throws CycleDetected naming one cycle.
std::vector<int> topological_indices(const Dag& dag);
std::vector<std::string> topological_order(const Dag& dag);
bool is_acyclic(const Dag& dag);

// Nodes with a directed path into `node`, excluding the node itself.
std::vector<int> ancestors(const Dag& dag, int node);
std::vector<int> ancestors(const Dag& dag, std::span<const int> nodes);

/// d-separation of x and y given a conditioning set (reachability on the
/// active-trail graph). Throws UnknownVariable for unknown names and
/// InvalidArgument when x == y or either endpoint is conditioned on.
bool d_separated(const Dag& dag, int x, int y, std::span<const int> given);
bool d_separated(const Dag& dag, std::string_view x, std::string_view y,
                 const std::vector<std::string>& given);

}  // namespace beliefnet
