#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bcc/rat.hpp"

namespace bcc {

using NodeId = std::int32_t;

// Edge weight q/p with the denominator p shared by the whole graph.
// Edge numerators live in [1, p^2]; path numerators stay below n*p^2,
// which make_graph requires to fit comfortably in 63 bits.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  std::int64_t num = 1;  // weight numerator over the graph denominator p
};

struct Adj {
  NodeId to;
  std::int64_t num;
};

class WeightedGraph {
 public:
  WeightedGraph() = default;  // empty; real graphs come from make()

  // Validates: ids in range, no self loops, no duplicates, numerators in
  // [1, p^2], graph connected. Edges are stored once, queried symmetrically.
  static WeightedGraph make(int n, std::int64_t p, std::vector<Edge> edges);

  int n() const { return n_; }
  std::int64_t p() const { return p_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Adj>& neighbors(NodeId u) const { return adj_[u]; }

  Rat weight(const Edge& e) const { return Rat(e.num, p_); }

  std::string to_text() const;
  static WeightedGraph from_text(const std::string& text);
  static WeightedGraph load(const std::string& path);
  void save(const std::string& path) const;

 private:
  int n_ = 0;
  std::int64_t p_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::vector<Adj>> adj_;
};

// n x n exact distances, stored as numerators over the graph denominator.
struct DistanceMatrix {
  int n = 0;
  std::int64_t p = 1;
  std::vector<std::int64_t> num;  // row-major

  std::int64_t& at(NodeId u, NodeId v) { return num[static_cast<std::size_t>(u) * n + v]; }
  std::int64_t at(NodeId u, NodeId v) const { return num[static_cast<std::size_t>(u) * n + v]; }
  Rat rat(NodeId u, NodeId v) const { return Rat(at(u, v), p); }
};

// Exact single-source distances (numerator form). The graph is connected,
// so every entry is finite.
std::vector<std::int64_t> dijkstra(const WeightedGraph& g, NodeId s);

DistanceMatrix exact_apsp(const WeightedGraph& g);

Rat exact_diameter(const WeightedGraph& g);

// The k nodes closest to u, sorted by (distance, id); u itself comes first.
std::vector<NodeId> k_closest(const WeightedGraph& g, NodeId u, int k);
std::vector<NodeId> k_closest(const std::vector<std::int64_t>& dist_from_u, int k);

// Minimum weight over paths with at most h edges; nullopt when no such path.
std::optional<std::int64_t> h_hop_distance(const WeightedGraph& g, NodeId u, NodeId v,
                                           std::int64_t h);
// All targets at once (one Bellman-Ford sweep).
std::vector<std::optional<std::int64_t>> h_hop_distances(const WeightedGraph& g, NodeId u,
                                                         std::int64_t h);

// Hop count metric of the communication graph (unweighted BFS diameter).
int hop_diameter(const WeightedGraph& g);

}  // namespace bcc
