#pragma once

#include <string>
#include <vector>

#include "bcc/graph.hpp"
#include "bcc/rng.hpp"
#include "bcc/sim.hpp"

namespace bcc {

// Two k^2-bit inputs; bit i encodes the node pair
// (i mod k, k + floor(i/k)) on each side.
struct DisjointnessInstance {
  int k = 2;
  std::vector<std::uint8_t> a;  // k^2 bits
  std::vector<std::uint8_t> b;

  static DisjointnessInstance all_zero(int k);
  static DisjointnessInstance all_one(int k);
  static DisjointnessInstance random(int k, Rng& rng);
  static DisjointnessInstance from_hex(int k, const std::string& a_hex, const std::string& b_hex);
  std::string a_hex() const;
  std::string b_hex() const;
};

// 1 iff no index has a(i) = b(i) = 1.
int disjointness(const DisjointnessInstance& inst);

// Bit i -> the pair (i mod k, k + floor(i/k)); a bijection onto
// [0,k) x [k,2k).
std::pair<int, int> bit_index_map(int i, int k);

// Experiment schedule parameter from the construction: k(n) = floor(n/10).
int k_of_n(int n);

struct GadgetGraph {
  enum class Group : std::uint8_t { L1, L2, R1, R2, CL, CR };
  struct Role {
    Group group;
    int index;  // position within the group, -1 for the centers
  };

  WeightedGraph graph;
  int k = 2;
  bool weighted = true;
  std::vector<char> side;  // 0 = side A (left), 1 = side B (right)
  std::vector<Role> role;
  std::vector<std::pair<NodeId, NodeId>> cut_edges;  // the 2k+1 light edges

  std::vector<NodeId> side_a() const;
  std::string labels_json() const;
};

// Mirrored cliques-with-centers joined by 2k+1 cut edges. Weighted variant:
// within-side edges weight 1, cut edges weight 1/p. Unweighted variant: all
// edges weight 1 (p forced to 1).
GadgetGraph build_gab(const DisjointnessInstance& inst, std::int64_t p, bool weighted);

struct DiameterReport {
  Rat observed;
  Rat predicted;
  bool consistent;
  int disjoint;
};

// Weighted dichotomy check: predicted (p+1)/p when disjoint, (2p+1)/p
// otherwise; consistency is exact rational equality.
DiameterReport verify_diameter_gap(const GadgetGraph& gadget, const DisjointnessInstance& inst);

struct UnweightedReport {
  std::int64_t observed;
  std::int64_t predicted;  // 2 when disjoint, 3 otherwise
  bool consistent;
  int disjoint;
};

UnweightedReport verify_unweighted_gap(const GadgetGraph& gadget,
                                       const DisjointnessInstance& inst);

struct BandwidthAudit {
  struct Round {
    std::int64_t round;
    std::int64_t cut_bits;
    std::int64_t budget;
    bool within_budget;
  };
  std::vector<Round> rounds;
  std::int64_t total_cut_bits = 0;
  bool all_within_budget = true;
};

// Audits a BCC trace against the n*B per-round budget across the side cut.
BandwidthAudit bandwidth_audit(const SimulationTrace& trace, const GadgetGraph& gadget);

// Gadget spec JSON: {k, p, a, b, weighted} with hex-encoded inputs.
std::string gadget_spec_json(const DisjointnessInstance& inst, std::int64_t p, bool weighted);
struct GadgetSpec {
  DisjointnessInstance inst;
  std::int64_t p;
  bool weighted;
};
GadgetSpec parse_gadget_spec(const std::string& json_text);

}  // namespace bcc
