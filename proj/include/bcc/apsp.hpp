#pragma once

#include <optional>
#include <vector>

#include "bcc/mssp.hpp"
#include "bcc/sim.hpp"

namespace bcc {

enum class Provenance : std::uint8_t { Diagonal, Shortcut, ViaHub };

// n x n distance estimates with provenance. Estimates never undershoot the
// true distance; every finite entry is the weight of a real walk.
struct ApproxDistanceMatrix {
  int n = 0;
  std::vector<std::optional<Rat>> est;  // row-major, normalized rationals
  std::vector<Provenance> tag;
  std::vector<NodeId> hub;  // meaningful when tag == ViaHub, else -1

  std::size_t idx(NodeId u, NodeId v) const { return static_cast<std::size_t>(u) * n + v; }
  const std::optional<Rat>& at(NodeId u, NodeId v) const { return est[idx(u, v)]; }
};

struct ApspResult {
  ApproxDistanceMatrix matrix;
  std::vector<NodeId> hitting_set;  // R, ascending
  int k = 1;
  std::int64_t h = 1;
  std::int64_t eps_den = 1;
  int levels = 0;
  std::int64_t rounds = 0;  // simulated rounds (0 for the reference pipeline)
};

// Parameters the pipeline derives from n: k = ceil(sqrt n) clamped to n,
// h = 4 ceil(sqrt n), eps = 1 / max(1, ceil(log2 n)).
struct ApspParams {
  int k;
  std::int64_t h;
  std::int64_t eps_den;

  static ApspParams for_n(int n);
};

// Full pipeline in BCC mode: k lightest-edge rounds, k closest-set rounds,
// local hitting set + shortcut weights, level-scanned source detection from
// the hitting set, one broadcast round per hub, local combination
// d''(u,v) = min_r d'(u,r) + d'(r,v) and final min against the known
// shortcut weight. Every node ends with the same matrix.
ApspResult apsp_approx(const WeightedGraph& g, SimulationTrace* trace_out = nullptr);

// The same mathematics computed centrally (exact closest sets, capped
// Dijkstra per level). Used as the paired oracle for the simulated run.
ApspResult apsp_reference(const WeightedGraph& g);

// Max entry of the estimate matrix. Requires every entry finite.
Rat diameter_estimate(const ApproxDistanceMatrix& m);

}  // namespace bcc
