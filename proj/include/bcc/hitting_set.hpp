#pragma once

#include <vector>

#include "bcc/graph.hpp"
#include "bcc/sim.hpp"

namespace bcc {

// Greedy hitting set over a family of node sets (family[v] = set for node v).
// Repeatedly adds the vertex contained in the most not-yet-hit sets, ties
// broken by minimum id. Deterministic.
std::vector<NodeId> greedy_hitting_set(const std::vector<std::vector<NodeId>>& family, int n);

struct HittingSetResult {
  std::vector<NodeId> hitting_set;                // S, ascending
  std::vector<std::vector<NodeId>> family;        // v -> S^k(v), (distance, id) order
  std::vector<std::vector<std::int64_t>> dists;   // v -> distances matching family order
  std::int64_t rounds_used = 0;
};

// Local reference pipeline: exact k-closest sets + greedy.
HittingSetResult hitting_set_reference(const WeightedGraph& g, int k);

// Simulated run: k rounds of lightest-edge broadcasts, k rounds of set-entry
// broadcasts, then the same greedy locally at every node. 2k rounds total.
HittingSetResult hitting_set_distributed(const WeightedGraph& g, int k,
                                         SimulationTrace* trace_out = nullptr);

// The closest-set a node can reconstruct from everyone's k lightest incident
// edges. Exposed because the shortcut and APSP builders reuse it.
std::vector<std::vector<Adj>> k_lightest_union(const WeightedGraph& g, int k);
std::vector<Adj> k_lightest_incident(const WeightedGraph& g, NodeId u, int k);

}  // namespace bcc
