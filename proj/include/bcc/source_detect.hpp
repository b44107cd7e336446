#pragma once

#include <vector>

#include "bcc/graph.hpp"
#include "bcc/sim.hpp"

namespace bcc {

struct SourceEntry {
  std::int64_t dist;
  NodeId source;
  friend bool operator==(const SourceEntry& a, const SourceEntry& b) {
    return a.dist == b.dist && a.source == b.source;
  }
  friend bool operator<(const SourceEntry& a, const SourceEntry& b) {
    return std::make_pair(a.dist, a.source) < std::make_pair(b.dist, b.source);
  }
};

// Per node: up to min(K, |S|) (distance, source) pairs with distance <= H,
// ascending lexicographic.
using SourceList = std::vector<SourceEntry>;

struct SourceDetectResult {
  std::vector<SourceList> lists;
  std::int64_t rounds = 0;
};

// Plain integer-weight structure for the delay-simulated runs. Weights are
// at least 1 and carry no denominator.
struct IntGraph {
  int n = 0;
  std::vector<std::vector<Adj>> adj;

  static IntGraph from_graph(const WeightedGraph& g);  // structure with unit weights
};

// Unweighted (S,H,K)-source detection on the hop structure of comm, CONGEST
// mode. Scheduled for min(H, D) + min(K, |S|) rounds.
SourceDetectResult source_detection(const WeightedGraph& comm, const std::vector<NodeId>& sources,
                                    std::int64_t H, std::int64_t K,
                                    SimulationTrace* trace_out = nullptr);

// Weighted variant: behaves like the unweighted algorithm on the graph where
// each edge is subdivided into w(e) unit edges; endpoints realize the
// subdivision by delaying deliveries w(e)-1 extra rounds. Distances reported
// are weighted distances capped at H.
SourceDetectResult weighted_source_detection(const IntGraph& g, const std::vector<NodeId>& sources,
                                             std::int64_t H, std::int64_t K,
                                             SimulationTrace* trace_out = nullptr);

// The node program itself, reusable inside larger pipelines (the APSP
// program runs one instance per rounding level).
class SourceDetectCore {
 public:
  SourceDetectCore() = default;
  SourceDetectCore(NodeId me, bool is_source, std::int64_t H, std::int64_t cap);

  // One send slot: lexicographically smallest unsent pair among the current
  // top-cap entries with dist < H, or nothing.
  std::optional<Payload> next_broadcast(std::int64_t round);
  // Deliver a pair received from a neighbor across an edge of weight m.
  void deliver(std::int64_t round, std::int64_t dist, NodeId source, std::int64_t edge_weight);
  // Absorb everything that has arrived by the end of round last_round.
  void finish(std::int64_t last_round) { integrate(last_round + 1); }

  SourceList list(std::int64_t K) const;

 private:
  void integrate(std::int64_t round);

  std::int64_t H_ = 0;
  std::int64_t cap_ = 0;  // min(K, |S|): both list pruning and send budget
  std::vector<std::int64_t> best_;                     // per source id, -1 = unknown
  std::vector<SourceEntry> known_;                     // sorted (dist, source)
  std::vector<SourceEntry> sent_;                      // pairs already broadcast
  struct Pending {
    std::int64_t release;
    std::int64_t dist;
    NodeId source;
  };
  std::vector<Pending> pending_;
};

}  // namespace bcc
