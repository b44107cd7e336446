#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bcc/graph.hpp"

namespace bcc {

enum class Mode { CONGEST, BCC };

const char* to_string(Mode m);

enum class PayloadKind : std::uint8_t {
  Edge = 1,       // (a, b, num): an edge with its weight numerator
  SetEntry = 2,   // (a, num): member of the sender's closest-node set plus distance
  SourceAnn = 3,  // (hop, a): source-detection pair, hop distance to source a
  HubDist = 4,    // (a, level, hop): distance to hub a, raw value under level's weights
  Token = 5,      // (a): bare id, used by small test programs
};

struct Payload {
  PayloadKind kind = PayloadKind::Token;
  NodeId a = 0;
  NodeId b = 0;
  std::int64_t num = 0;
  std::int64_t hop = 0;
  int level = 0;

  static Payload edge(NodeId u, NodeId v, std::int64_t num);
  static Payload set_entry(NodeId member, std::int64_t num);
  static Payload source_ann(std::int64_t hop, NodeId source);
  static Payload hub_dist(NodeId hub, int level, std::int64_t raw);
  static Payload token(NodeId id);

  friend bool operator==(const Payload& x, const Payload& y) {
    return x.kind == y.kind && x.a == y.a && x.b == y.b && x.num == y.num && x.hop == y.hop &&
           x.level == y.level;
  }
};

// Field widths are fixed per run from the graph and algorithm parameters, so
// every payload has one well-defined bit size and the audits are bit-exact.
struct Codec {
  int id_bits = 1;      // NodeId fields
  int weight_bits = 1;  // weight numerators, covers path sums up to n*p^2
  int hop_bits = 1;     // hop / capped-distance fields
  int level_bits = 1;   // level index fields

  static Codec for_graph(int n, std::int64_t p, std::int64_t hop_cap = 0, int level_cap = 0);

  int size_bits(PayloadKind kind) const;
  int size_bits(const Payload& p) const { return size_bits(p.kind); }

  // decode(encode(x)) == x; encode throws InvalidParameter if a field does
  // not fit its width, decode throws MalformedBits on junk.
  struct Bits {
    std::uint64_t value = 0;
    int size = 0;
  };
  Bits encode(const Payload& p) const;
  Payload decode(const Bits& bits) const;

  // Largest payload this codec can emit; used to size B.
  int max_payload_bits() const;
};

// B default: room for one (kind, NodeId, NodeId, weight-numerator) record.
int default_message_bits(int n, std::int64_t p);

struct SimConfig {
  Mode mode = Mode::BCC;
  int bits_per_message = 0;  // B
  std::int64_t max_rounds = 1'000'000;
  Codec codec;

  static SimConfig make(Mode mode, int n, std::int64_t p, const Codec& codec, int bits = 0);
};

struct Received {
  NodeId from;
  Payload payload;
};

// A node's behavior: per round it may broadcast one payload, then consumes
// everything delivered to it this round. Transitions may depend only on the
// node's own state, its id, n, and received messages.
class NodeProgram {
 public:
  virtual ~NodeProgram() = default;
  virtual std::optional<Payload> on_send(std::int64_t round) = 0;
  virtual void on_receive(std::int64_t round, const std::vector<Received>& inbox) = 0;
  virtual bool halted() const = 0;
};

struct TraceMessage {
  NodeId node;
  PayloadKind kind;
  int bits;
};

struct SimulationTrace {
  Mode mode = Mode::BCC;
  int B = 0;
  int n = 0;
  std::int64_t rounds = 0;
  std::vector<std::vector<TraceMessage>> per_round;  // broadcasters only; silence is implicit
  std::vector<std::vector<NodeId>> adjacency;        // comm graph, for cut accounting

  std::string to_json() const;
  std::string to_csv(const std::vector<NodeId>& partition) const;
  std::int64_t total_bits() const;
};

SimulationTrace run(const std::vector<std::unique_ptr<NodeProgram>>& programs,
                    const WeightedGraph& comm_graph, const SimConfig& config);

// Per-round bits whose broadcast crosses the (P, V\P) cut. A broadcast is
// counted once per broadcasting node (the same B bits go to everyone).
struct CutRound {
  std::int64_t round;
  std::int64_t from_partition;  // bits broadcast inside P that reach V\P
  std::int64_t into_partition;  // bits broadcast in V\P that reach P
  std::int64_t total() const { return from_partition + into_partition; }
};

std::vector<CutRound> cut_traffic(const SimulationTrace& trace,
                                  const std::vector<NodeId>& partition);

// Structural check over a trace: at most one payload per node per round and
// every payload within B. Distinguishes broadcast from unicast behavior.
bool audit_broadcast_only(const SimulationTrace& trace);

}  // namespace bcc
