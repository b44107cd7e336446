#include "bcc/sim.hpp"

#include <algorithm>
#include <sstream>

#include "bcc/error.hpp"

#include "json.hpp"

namespace bcc {

const char* to_string(Mode m) { return m == Mode::CONGEST ? "congest" : "bcc"; }

Payload Payload::edge(NodeId u, NodeId v, std::int64_t num) {
  Payload p;
  p.kind = PayloadKind::Edge;
  p.a = u;
  p.b = v;
  p.num = num;
  return p;
}

Payload Payload::set_entry(NodeId member, std::int64_t num) {
  Payload p;
  p.kind = PayloadKind::SetEntry;
  p.a = member;
  p.num = num;
  return p;
}

Payload Payload::source_ann(std::int64_t hop, NodeId source) {
  Payload p;
  p.kind = PayloadKind::SourceAnn;
  p.hop = hop;
  p.a = source;
  return p;
}

Payload Payload::hub_dist(NodeId hub, int level, std::int64_t raw) {
  Payload p;
  p.kind = PayloadKind::HubDist;
  p.a = hub;
  p.level = level;
  p.hop = raw;
  return p;
}

Payload Payload::token(NodeId id) {
  Payload p;
  p.kind = PayloadKind::Token;
  p.a = id;
  return p;
}

Codec Codec::for_graph(int n, std::int64_t p, std::int64_t hop_cap, int level_cap) {
  Codec c;
  c.id_bits = std::max(1, ceil_log2(n));
  c.weight_bits = std::max(1, ceil_log2(static_cast<std::int64_t>(n) * p * p + 1));
  c.hop_bits = std::max(1, ceil_log2(std::max<std::int64_t>(hop_cap, n) + 1));
  c.level_bits = std::max(1, ceil_log2(level_cap + 2));
  return c;
}

namespace {
constexpr int kKindBits = 4;
}

int Codec::size_bits(PayloadKind kind) const {
  switch (kind) {
    case PayloadKind::Edge: return kKindBits + 2 * id_bits + weight_bits;
    case PayloadKind::SetEntry: return kKindBits + id_bits + weight_bits;
    case PayloadKind::SourceAnn: return kKindBits + hop_bits + id_bits;
    case PayloadKind::HubDist: return kKindBits + id_bits + level_bits + hop_bits;
    case PayloadKind::Token: return kKindBits + id_bits;
  }
  throw Error(ErrorCode::InvalidParameter, "unknown payload kind");
}

int Codec::max_payload_bits() const {
  int best = 0;
  for (auto k : {PayloadKind::Edge, PayloadKind::SetEntry, PayloadKind::SourceAnn,
                 PayloadKind::HubDist, PayloadKind::Token})
    best = std::max(best, size_bits(k));
  return best;
}

namespace {

void pack(std::uint64_t& value, int& at, std::uint64_t field, int width, const char* name) {
  if (width < 64 && field >= (1ull << width))
    throw Error(ErrorCode::InvalidParameter, std::string("field does not fit width: ") + name);
  value |= field << at;
  at += width;
}

std::uint64_t unpack(std::uint64_t value, int& at, int width) {
  std::uint64_t mask = width >= 64 ? ~0ull : ((1ull << width) - 1);
  std::uint64_t field = (value >> at) & mask;
  at += width;
  return field;
}

}  // namespace

Codec::Bits Codec::encode(const Payload& p) const {
  Bits b;
  b.size = size_bits(p.kind);
  if (b.size > 64) throw Error(ErrorCode::InvalidParameter, "payload exceeds 64-bit codec");
  int at = 0;
  pack(b.value, at, static_cast<std::uint64_t>(p.kind), kKindBits, "kind");
  switch (p.kind) {
    case PayloadKind::Edge:
      pack(b.value, at, static_cast<std::uint64_t>(p.a), id_bits, "a");
      pack(b.value, at, static_cast<std::uint64_t>(p.b), id_bits, "b");
      pack(b.value, at, static_cast<std::uint64_t>(p.num), weight_bits, "num");
      break;
    case PayloadKind::SetEntry:
      pack(b.value, at, static_cast<std::uint64_t>(p.a), id_bits, "a");
      pack(b.value, at, static_cast<std::uint64_t>(p.num), weight_bits, "num");
      break;
    case PayloadKind::SourceAnn:
      pack(b.value, at, static_cast<std::uint64_t>(p.hop), hop_bits, "hop");
      pack(b.value, at, static_cast<std::uint64_t>(p.a), id_bits, "a");
      break;
    case PayloadKind::HubDist:
      pack(b.value, at, static_cast<std::uint64_t>(p.a), id_bits, "a");
      pack(b.value, at, static_cast<std::uint64_t>(p.level), level_bits, "level");
      pack(b.value, at, static_cast<std::uint64_t>(p.hop), hop_bits, "hop");
      break;
    case PayloadKind::Token:
      pack(b.value, at, static_cast<std::uint64_t>(p.a), id_bits, "a");
      break;
  }
  return b;
}

Payload Codec::decode(const Bits& bits) const {
  int at = 0;
  std::uint64_t kind_raw = unpack(bits.value, at, kKindBits);
  if (kind_raw < 1 || kind_raw > 5) throw Error(ErrorCode::MalformedBits, "bad kind tag");
  Payload p;
  p.kind = static_cast<PayloadKind>(kind_raw);
  if (bits.size != size_bits(p.kind))
    throw Error(ErrorCode::MalformedBits, "size does not match kind");
  switch (p.kind) {
    case PayloadKind::Edge:
      p.a = static_cast<NodeId>(unpack(bits.value, at, id_bits));
      p.b = static_cast<NodeId>(unpack(bits.value, at, id_bits));
      p.num = static_cast<std::int64_t>(unpack(bits.value, at, weight_bits));
      break;
    case PayloadKind::SetEntry:
      p.a = static_cast<NodeId>(unpack(bits.value, at, id_bits));
      p.num = static_cast<std::int64_t>(unpack(bits.value, at, weight_bits));
      break;
    case PayloadKind::SourceAnn:
      p.hop = static_cast<std::int64_t>(unpack(bits.value, at, hop_bits));
      p.a = static_cast<NodeId>(unpack(bits.value, at, id_bits));
      break;
    case PayloadKind::HubDist:
      p.a = static_cast<NodeId>(unpack(bits.value, at, id_bits));
      p.level = static_cast<int>(unpack(bits.value, at, level_bits));
      p.hop = static_cast<std::int64_t>(unpack(bits.value, at, hop_bits));
      break;
    case PayloadKind::Token:
      p.a = static_cast<NodeId>(unpack(bits.value, at, id_bits));
      break;
  }
  if (at < bits.size && (bits.value >> at) != 0)
    throw Error(ErrorCode::MalformedBits, "trailing bits");
  return p;
}

int default_message_bits(int n, std::int64_t p) {
  return 3 * std::max(1, ceil_log2(n)) + ceil_log2(p * p + 1) + 4;
}

SimConfig SimConfig::make(Mode mode, int n, std::int64_t p, const Codec& codec, int bits) {
  SimConfig cfg;
  cfg.mode = mode;
  cfg.codec = codec;
  cfg.bits_per_message = bits > 0 ? bits : default_message_bits(n, p);
  // B must accommodate one full edge record.
  if (cfg.bits_per_message < codec.size_bits(PayloadKind::Edge))
    throw Error(ErrorCode::InvalidParameter, "B too small for an edge record");
  return cfg;
}

SimulationTrace run(const std::vector<std::unique_ptr<NodeProgram>>& programs,
                    const WeightedGraph& comm_graph, const SimConfig& config) {
  const int n = comm_graph.n();
  if (static_cast<int>(programs.size()) != n)
    throw Error(ErrorCode::InvalidParameter, "one program per node required");

  SimulationTrace trace;
  trace.mode = config.mode;
  trace.B = config.bits_per_message;
  trace.n = n;
  trace.adjacency.resize(n);
  for (NodeId u = 0; u < n; ++u)
    for (const auto& a : comm_graph.neighbors(u)) trace.adjacency[u].push_back(a.to);

  auto all_halted = [&] {
    for (const auto& p : programs)
      if (!p->halted()) return false;
    return true;
  };

  std::vector<std::optional<Payload>> sent(n);
  std::vector<NodeId> senders;
  while (!all_halted()) {
    if (trace.rounds == config.max_rounds)
      throw Error(ErrorCode::RoundLimitExceeded, "round cap hit before all programs halted");
    std::int64_t t = ++trace.rounds;

    std::vector<TraceMessage> round_msgs;
    senders.clear();
    for (NodeId u = 0; u < n; ++u) {
      sent[u].reset();
      if (programs[u]->halted()) continue;
      sent[u] = programs[u]->on_send(t);
      if (sent[u]) {
        auto bits = config.codec.encode(*sent[u]);  // validates the fields
        if (bits.size > config.bits_per_message)
          throw Error(ErrorCode::MessageTooLarge, "payload of " + std::to_string(bits.size) +
                                                      " bits exceeds B=" +
                                                      std::to_string(config.bits_per_message));
        round_msgs.push_back({u, sent[u]->kind, bits.size});
        senders.push_back(u);
      }
    }
    trace.per_round.push_back(std::move(round_msgs));

    std::vector<Received> inbox;
    for (NodeId v = 0; v < n; ++v) {
      if (programs[v]->halted()) continue;
      inbox.clear();
      if (config.mode == Mode::BCC) {
        for (NodeId u : senders)
          if (u != v) inbox.push_back({u, *sent[u]});
      } else {
        for (NodeId u : trace.adjacency[v])
          if (sent[u]) inbox.push_back({u, *sent[u]});
      }
      programs[v]->on_receive(t, inbox);
    }
  }
  return trace;
}

std::vector<CutRound> cut_traffic(const SimulationTrace& trace,
                                  const std::vector<NodeId>& partition) {
  std::vector<char> in_p(trace.n, 0);
  for (NodeId u : partition) in_p[u] = 1;
  int p_size = 0;
  for (char c : in_p) p_size += c;
  if (p_size == 0 || p_size == trace.n)
    throw Error(ErrorCode::InvalidParameter, "partition must be a proper non-empty subset");

  std::vector<CutRound> out;
  for (std::size_t r = 0; r < trace.per_round.size(); ++r) {
    CutRound cr{static_cast<std::int64_t>(r) + 1, 0, 0};
    for (const auto& msg : trace.per_round[r]) {
      bool crosses = false;
      if (trace.mode == Mode::BCC) {
        crosses = true;  // some receiver is always on the other side of a proper cut
      } else {
        for (NodeId nb : trace.adjacency[msg.node])
          if (in_p[nb] != in_p[msg.node]) {
            crosses = true;
            break;
          }
      }
      if (!crosses) continue;
      if (in_p[msg.node])
        cr.from_partition += msg.bits;
      else
        cr.into_partition += msg.bits;
    }
    out.push_back(cr);
  }
  return out;
}

bool audit_broadcast_only(const SimulationTrace& trace) {
  for (const auto& round : trace.per_round) {
    std::vector<char> seen(trace.n, 0);
    for (const auto& msg : round) {
      if (msg.node < 0 || msg.node >= trace.n) return false;
      if (seen[msg.node]) return false;  // two payloads in one round: unicast behavior
      seen[msg.node] = 1;
      if (msg.bits > trace.B) return false;
    }
  }
  return true;
}

std::int64_t SimulationTrace::total_bits() const {
  std::int64_t total = 0;
  for (const auto& round : per_round)
    for (const auto& msg : round) total += msg.bits;
  return total;
}

std::string SimulationTrace::to_json() const {
  nlohmann::ordered_json j;
  j["mode"] = to_string(mode);
  j["B"] = B;
  j["rounds"] = rounds;
  auto rounds_json = nlohmann::ordered_json::array();
  for (const auto& round : per_round) {
    auto rj = nlohmann::ordered_json::array();
    for (const auto& msg : round) {
      rj.push_back({{"node", msg.node},
                    {"kind", static_cast<int>(msg.kind)},
                    {"bits", msg.bits}});
    }
    rounds_json.push_back(std::move(rj));
  }
  j["per_round"] = std::move(rounds_json);
  return j.dump(2) + "\n";
}

std::string SimulationTrace::to_csv(const std::vector<NodeId>& partition) const {
  std::vector<CutRound> cut;
  if (!partition.empty()) cut = cut_traffic(*this, partition);
  std::ostringstream os;
  os << "round,total_bits,cut_bits\n";
  for (std::size_t r = 0; r < per_round.size(); ++r) {
    std::int64_t total = 0;
    for (const auto& msg : per_round[r]) total += msg.bits;
    std::int64_t cut_bits = partition.empty() ? 0 : cut[r].total();
    os << (r + 1) << "," << total << "," << cut_bits << "\n";
  }
  return os.str();
}

}  // namespace bcc
