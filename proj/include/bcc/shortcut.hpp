#pragma once

#include <vector>

#include "bcc/graph.hpp"

namespace bcc {

// Base graph plus an edge (u,v) of weight d_w(u,v) for every v in S^k(u).
// Combined weights never change the shortest-path metric; they only shrink
// hop counts.
struct ShortcutGraph {
  int n = 0;
  std::int64_t p = 1;
  int k = 1;
  std::vector<std::vector<NodeId>> family;             // u -> S^k(u), (distance, id) order
  std::vector<std::vector<std::int64_t>> family_dists; // aligned distances
  std::vector<Edge> shortcut_edges;                    // (u, v, d_w(u,v)), v in S^k(u) \ {u}
  std::vector<Edge> combined_edges;                    // E^k with combined weights w'
  std::vector<std::vector<Adj>> adj;                   // adjacency over combined_edges
  std::int64_t max_weight_num = 0;                     // W numerator over p
};

ShortcutGraph build_shortcut_graph(const WeightedGraph& g, int k);

// Shared by the distributed pipeline and the local builder: combined weights
// from a family of closest-sets plus a pool of known edges. An ordered pair
// (x,y) contributes min over z in S^k(x) with y in S^k(z) of d(x,z)+d(z,y);
// the stored undirected weight is the minimum over both orientations and the
// pool weight.
struct EdgePool {
  // key (min,max) -> weight numerator
  std::vector<Edge> edges;
};

ShortcutGraph combine_shortcuts(int n, std::int64_t p, int k,
                                std::vector<std::vector<NodeId>> family,
                                std::vector<std::vector<std::int64_t>> family_dists,
                                const std::vector<Edge>& known_edges);

}  // namespace bcc
