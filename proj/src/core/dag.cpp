#include "beliefnet/core/dag.hpp"

#include <algorithm>
#include <deque>

#include "beliefnet/core/error.hpp"

namespace beliefnet {

Dag::Dag(std::vector<std::string> nodes)
    : nodes_(std::move(nodes)), parents_(nodes_.size()) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!index_.emplace(nodes_[i], static_cast<int>(i)).second) {
      throw Error(ErrorKind::InvalidArgument,
                  "duplicate node '" + nodes_[i] + "'");
    }
  }
}

Dag Dag::from_parents(
    std::vector<std::string> nodes,
    const std::map<std::string, std::vector<std::string>>& parents) {
  Dag dag(std::move(nodes));
  for (const auto& [child, list] : parents) {
    for (const auto& parent : list) dag.add_arc(parent, child);
  }
  return dag;
}

std::optional<int> Dag::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Dag::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::UnknownVariable,
              "no node named '" + std::string(name) + "'");
}

std::vector<int> Dag::children(int node) const {
  std::vector<int> out;
  for (std::size_t c = 0; c < size(); ++c) {
    const auto& pa = parents_[c];
    if (std::find(pa.begin(), pa.end(), node) != pa.end()) {
      out.push_back(static_cast<int>(c));
    }
  }
  return out;
}

bool Dag::has_arc(int from, int to) const {
  const auto& pa = parents_.at(to);
  return std::find(pa.begin(), pa.end(), from) != pa.end();
}

bool Dag::has_arc(std::string_view from, std::string_view to) const {
  return has_arc(index_of(from), index_of(to));
}

void Dag::add_arc(int from, int to) {
  if (from < 0 || to < 0 || from >= static_cast<int>(size()) ||
      to >= static_cast<int>(size())) {
    throw Error(ErrorKind::UnknownVariable, "arc endpoint out of range");
  }
  if (from == to) {
    throw Error(ErrorKind::InvalidArgument,
                "self-loop on '" + nodes_[from] + "'");
  }
  if (has_arc(from, to)) {
    throw Error(ErrorKind::InvalidArgument, "duplicate arc " + nodes_[from] +
                                                " -> " + nodes_[to]);
  }
  parents_[to].push_back(from);
}

void Dag::add_arc(std::string_view from, std::string_view to) {
  add_arc(index_of(from), index_of(to));
}

void Dag::remove_arc(int from, int to) {
  auto& pa = parents_.at(to);
  auto it = std::find(pa.begin(), pa.end(), from);
  if (it == pa.end()) {
    throw Error(ErrorKind::InvalidArgument, "no arc " + nodes_.at(from) +
                                                " -> " + nodes_[to]);
  }
  pa.erase(it);
}

void Dag::reverse_arc(int from, int to) {
  remove_arc(from, to);
  add_arc(to, from);
}

bool Dag::reachable(int from, int to) const {
  if (from == to) return true;
  // Walk backwards from `to` through parents.
  std::vector<char> seen(size(), 0);
  std::vector<int> stack{to};
  seen[to] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int p : parents_[v]) {
      if (p == from) return true;
      if (!seen[p]) {
        seen[p] = 1;
        stack.push_back(p);
      }
    }
  }
  return false;
}

std::vector<Arc> Dag::arcs() const {
  std::vector<Arc> out;
  for (std::size_t c = 0; c < size(); ++c) {
    for (int p : parents_[c]) out.push_back({p, static_cast<int>(c)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Dag::arc_count() const {
  std::size_t n = 0;
  for (const auto& pa : parents_) n += pa.size();
  return n;
}

void Dag::canonicalize() {
  for (auto& pa : parents_) std::sort(pa.begin(), pa.end());
}

std::vector<int> topological_indices(const Dag& dag) {
  const int n = static_cast<int>(dag.size());
  // 0 = unvisited, 1 = on stack, 2 = done.
  std::vector<int> state(n, 0);
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> path;

  // Depth-first over parents: a node is emitted after all of its parents.
  auto visit = [&](auto&& self, int v) -> void {
    state[v] = 1;
    path.push_back(v);
    for (int p : dag.parents(v)) {
      if (state[p] == 1) {
        auto it = std::find(path.begin(), path.end(), p);
        std::string cycle;
        for (auto jt = it; jt != path.end(); ++jt) {
          cycle += dag.name(*jt) + " <- ";
        }
        cycle += dag.name(p);
        throw Error(ErrorKind::CycleDetected, "cycle: " + cycle);
      }
      if (state[p] == 0) self(self, p);
    }
    path.pop_back();
    state[v] = 2;
    order.push_back(v);
  };
  for (int v = 0; v < n; ++v) {
    if (state[v] == 0) visit(visit, v);
  }
  return order;
}

std::vector<std::string> topological_order(const Dag& dag) {
  std::vector<std::string> out;
  for (int v : topological_indices(dag)) out.push_back(dag.name(v));
  return out;
}

bool is_acyclic(const Dag& dag) {
  try {
    topological_indices(dag);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<int> ancestors(const Dag& dag, std::span<const int> nodes) {
  std::vector<char> seen(dag.size(), 0);
  std::vector<int> stack(nodes.begin(), nodes.end());
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int p : dag.parents(v)) {
      if (!seen[p]) {
        seen[p] = 1;
        stack.push_back(p);
      }
    }
  }
  std::vector<int> out;
  for (std::size_t v = 0; v < dag.size(); ++v) {
    if (seen[v] && std::find(nodes.begin(), nodes.end(), static_cast<int>(v)) ==
                       nodes.end()) {
      out.push_back(static_cast<int>(v));
    }
  }
  return out;
}

std::vector<int> ancestors(const Dag& dag, int node) {
  const int nodes[] = {node};
  return ancestors(dag, std::span<const int>(nodes));
}

bool d_separated(const Dag& dag, int x, int y, std::span<const int> given) {
  const int n = static_cast<int>(dag.size());
  if (x < 0 || y < 0 || x >= n || y >= n) {
    throw Error(ErrorKind::UnknownVariable, "d_separated: node out of range");
  }
  if (x == y) {
    throw Error(ErrorKind::InvalidArgument, "d_separated: x and y coincide");
  }
  std::vector<char> observed(n, 0);
  for (int z : given) {
    if (z < 0 || z >= n) {
      throw Error(ErrorKind::UnknownVariable, "d_separated: node out of range");
    }
    observed[z] = 1;
  }
  if (observed[x] || observed[y]) {
    throw Error(ErrorKind::InvalidArgument,
                "d_separated: endpoint is in the conditioning set");
  }

  // Observed nodes and their ancestors; a collider is open iff it is here.
  std::vector<char> opens_collider(n, 0);
  for (int z : given) opens_collider[z] = 1;
  for (int a : ancestors(dag, given)) opens_collider[a] = 1;

  std::vector<std::vector<int>> children(n);
  for (int v = 0; v < n; ++v) {
    for (int p : dag.parents(v)) children[p].push_back(v);
  }

  // Trail states: (node, arrived from a child = up / from a parent = down).
  enum : int { kUp = 0, kDown = 1 };
  std::vector<char> visited(2 * n, 0);
  std::deque<std::pair<int, int>> queue{{x, kUp}};
  while (!queue.empty()) {
    auto [v, dir] = queue.front();
    queue.pop_front();
    if (visited[2 * v + dir]) continue;
    visited[2 * v + dir] = 1;
    if (v == y) return false;
    if (dir == kUp) {
      if (observed[v]) continue;
      for (int p : dag.parents(v)) queue.emplace_back(p, kUp);
      for (int c : children[v]) queue.emplace_back(c, kDown);
    } else {
      if (!observed[v]) {
        for (int c : children[v]) queue.emplace_back(c, kDown);
      }
      if (opens_collider[v]) {
        for (int p : dag.parents(v)) queue.emplace_back(p, kUp);
      }
    }
  }
  return true;
}

bool d_separated(const Dag& dag, std::string_view x, std::string_view y,
                 const std::vector<std::string>& given) {
  std::vector<int> z;
  for (const auto& g : given) z.push_back(dag.index_of(g));
  return d_separated(dag, dag.index_of(x), dag.index_of(y), z);
}

}  // namespace beliefnet
