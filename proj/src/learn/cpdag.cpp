#include "beliefnet/learn/cpdag.hpp"

#include "beliefnet/core/error.hpp"

namespace beliefnet {
namespace {

bool adjacent(const PdagMatrix& g, int a, int b) { return g(a, b) || g(b, a); }
bool directed(const PdagMatrix& g, int a, int b) { return g(a, b) && !g(b, a); }
bool undirected(const PdagMatrix& g, int a, int b) { return g(a, b) && g(b, a); }

void orient(PdagMatrix& g, int a, int b) {
  g(a, b) = 1;
  g(b, a) = 0;
}

}  // namespace

PdagMatrix cpdag(const Dag& dag) {
  const int n = static_cast<int>(dag.size());
  PdagMatrix skeleton = PdagMatrix::Zero(n, n);
  for (const auto& arc : dag.arcs()) {
    skeleton(arc.from, arc.to) = 1;
    skeleton(arc.to, arc.from) = 1;
  }
  PdagMatrix g = skeleton;

  // v-structures a -> c <- b with a, b non-adjacent.
  for (int c = 0; c < n; ++c) {
    const auto& pa = dag.parents(c);
    for (std::size_t i = 0; i < pa.size(); ++i) {
      for (std::size_t j = i + 1; j < pa.size(); ++j) {
        if (!adjacent(skeleton, pa[i], pa[j])) {
          orient(g, pa[i], c);
          orient(g, pa[j], c);
        }
      }
    }
  }

  // Meek rules 1-3 to a fixed point; these are complete when starting from
  // the v-structures of a DAG.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a == b || !undirected(g, a, b)) continue;
        bool compelled = false;
        // R1: c -> a - b, c and b non-adjacent.
        for (int c = 0; c < n && !compelled; ++c) {
          if (c != b && directed(g, c, a) && !adjacent(g, c, b)) compelled = true;
        }
        // R2: a -> c -> b.
        for (int c = 0; c < n && !compelled; ++c) {
          if (directed(g, a, c) && directed(g, c, b)) compelled = true;
        }
        // R3: a - c -> b, a - d -> b, c and d non-adjacent.
        for (int c = 0; c < n && !compelled; ++c) {
          if (!undirected(g, a, c) || !directed(g, c, b)) continue;
          for (int d = c + 1; d < n && !compelled; ++d) {
            if (undirected(g, a, d) && directed(g, d, b) && !adjacent(g, c, d)) {
              compelled = true;
            }
          }
        }
        if (compelled) {
          orient(g, a, b);
          changed = true;
        }
      }
    }
  }
  return g;
}

int structural_hamming_distance(const PdagMatrix& a, const PdagMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::InvalidArgument, "graphs of different size");
  }
  int d = 0;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = i + 1; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j) || a(j, i) != b(j, i)) ++d;
    }
  }
  return d;
}

}  // namespace beliefnet
