#include "bcc/source_detect.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "bcc/error.hpp"

namespace bcc {

IntGraph IntGraph::from_graph(const WeightedGraph& g) {
  IntGraph ig;
  ig.n = g.n();
  ig.adj.resize(ig.n);
  for (NodeId u = 0; u < g.n(); ++u)
    for (const auto& a : g.neighbors(u)) ig.adj[u].push_back({a.to, 1});
  return ig;
}

SourceDetectCore::SourceDetectCore(NodeId me, bool is_source, std::int64_t H, std::int64_t cap)
    : H_(H), cap_(cap) {
  if (is_source) known_.push_back({0, me});
}

void SourceDetectCore::integrate(std::int64_t round) {
  if (pending_.empty()) return;
  std::vector<Pending> keep;
  for (const auto& p : pending_) {
    if (p.release >= round) {
      keep.push_back(p);
      continue;
    }
    auto it = std::find_if(known_.begin(), known_.end(),
                           [&](const SourceEntry& e) { return e.source == p.source; });
    if (it != known_.end()) {
      if (it->dist <= p.dist) continue;
      known_.erase(it);
    }
    SourceEntry e{p.dist, p.source};
    known_.insert(std::upper_bound(known_.begin(), known_.end(), e), e);
  }
  pending_.swap(keep);
}

std::optional<Payload> SourceDetectCore::next_broadcast(std::int64_t round) {
  integrate(round);
  std::int64_t limit = std::min<std::int64_t>(cap_, static_cast<std::int64_t>(known_.size()));
  for (std::int64_t i = 0; i < limit; ++i) {
    const auto& e = known_[i];
    if (e.dist >= H_) break;  // nothing past this can help a neighbor
    if (std::find(sent_.begin(), sent_.end(), e) != sent_.end()) continue;
    sent_.push_back(e);
    return Payload::source_ann(e.dist, e.source);
  }
  return std::nullopt;
}

void SourceDetectCore::deliver(std::int64_t round, std::int64_t dist, NodeId source,
                               std::int64_t edge_weight) {
  std::int64_t nd = dist + edge_weight;
  if (nd > H_) return;
  pending_.push_back({round + edge_weight - 1, nd, source});
}

SourceList SourceDetectCore::list(std::int64_t K) const {
  SourceList out = known_;
  if (static_cast<std::int64_t>(out.size()) > K) out.resize(K);
  return out;
}

namespace {

class SourceDetectProgram : public NodeProgram {
 public:
  SourceDetectProgram(NodeId me, bool is_source, std::int64_t H, std::int64_t K,
                      std::int64_t n_sources, std::int64_t total_rounds,
                      std::vector<Adj> incident)
      : core_(me, is_source, H, std::min(K, n_sources)), K_(K), total_rounds_(total_rounds) {
    for (const auto& a : incident) weight_[a.to] = a.num;
    halted_ = total_rounds_ == 0;
  }

  std::optional<Payload> on_send(std::int64_t round) override { return core_.next_broadcast(round); }

  void on_receive(std::int64_t round, const std::vector<Received>& inbox) override {
    for (const auto& r : inbox) {
      auto it = weight_.find(r.from);
      if (it == weight_.end()) continue;  // not a structure edge
      core_.deliver(round, r.payload.hop, r.payload.a, it->second);
    }
    if (round == total_rounds_) {
      core_.finish(round);
      halted_ = true;
    }
  }

  bool halted() const override { return halted_; }

  SourceList list() const { return core_.list(K_); }

 private:
  SourceDetectCore core_;
  std::int64_t K_;
  std::int64_t total_rounds_;
  std::map<NodeId, std::int64_t> weight_;
  bool halted_ = false;
};

std::vector<std::int64_t> dijkstra_int(const IntGraph& g, NodeId s) {
  const std::int64_t inf = INT64_MAX;
  std::vector<std::int64_t> dist(g.n, inf);
  using Item = std::pair<std::int64_t, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[s] = 0;
  pq.push({0, s});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != dist[u]) continue;
    for (const auto& a : g.adj[u]) {
      if (dist[a.to] > d + a.num) {
        dist[a.to] = d + a.num;
        pq.push({dist[a.to], a.to});
      }
    }
  }
  return dist;
}

SourceDetectResult run_source_detection(const IntGraph& ig, const WeightedGraph& comm,
                                        const std::vector<NodeId>& sources, std::int64_t H,
                                        std::int64_t K, SimulationTrace* trace_out) {
  if (sources.empty()) throw Error(ErrorCode::InvalidParameter, "sources must be non-empty");
  if (H < 1 || K < 1) throw Error(ErrorCode::InvalidParameter, "H and K must be at least 1");
  std::vector<char> is_source(ig.n, 0);
  for (NodeId s : sources) {
    if (s < 0 || s >= ig.n) throw Error(ErrorCode::IndexOutOfRange, "source out of range");
    is_source[s] = 1;
  }
  std::int64_t n_sources = 0;
  for (char c : is_source) n_sources += c;

  // Weighted diameter over the structure bounds every relevant distance.
  std::int64_t diam = 0;
  for (NodeId u = 0; u < ig.n; ++u) {
    auto d = dijkstra_int(ig, u);
    for (auto x : d) diam = std::max(diam, x);
  }
  std::int64_t total_rounds = std::min(H, diam) + std::min(K, n_sources);

  std::vector<std::unique_ptr<NodeProgram>> programs;
  for (NodeId u = 0; u < ig.n; ++u) {
    std::vector<Adj> inc(ig.adj[u].begin(), ig.adj[u].end());
    programs.push_back(std::make_unique<SourceDetectProgram>(u, is_source[u] != 0, H, K,
                                                             n_sources, total_rounds,
                                                             std::move(inc)));
  }
  auto codec = Codec::for_graph(comm.n(), comm.p(), H);
  int bits = std::max(default_message_bits(comm.n(), comm.p()),
                      codec.size_bits(PayloadKind::SourceAnn));
  auto cfg = SimConfig::make(Mode::CONGEST, comm.n(), comm.p(), codec, bits);
  auto trace = run(programs, comm, cfg);

  SourceDetectResult res;
  res.rounds = trace.rounds;
  for (auto& prog : programs)
    res.lists.push_back(static_cast<SourceDetectProgram*>(prog.get())->list());
  if (trace_out) *trace_out = std::move(trace);
  return res;
}

}  // namespace

SourceDetectResult source_detection(const WeightedGraph& comm, const std::vector<NodeId>& sources,
                                    std::int64_t H, std::int64_t K, SimulationTrace* trace_out) {
  return run_source_detection(IntGraph::from_graph(comm), comm, sources, H, K, trace_out);
}

SourceDetectResult weighted_source_detection(const IntGraph& g, const std::vector<NodeId>& sources,
                                             std::int64_t H, std::int64_t K,
                                             SimulationTrace* trace_out) {
  for (const auto& adj : g.adj)
    for (const auto& a : adj)
      if (a.num < 1) throw Error(ErrorCode::InvalidParameter, "integer weights must be >= 1");
  // Communication runs over the same structure with unit weights.
  std::vector<Edge> edges;
  for (NodeId u = 0; u < g.n; ++u)
    for (const auto& a : g.adj[u])
      if (u < a.to) edges.push_back({u, a.to, 1});
  auto comm = WeightedGraph::make(g.n, 1, std::move(edges));
  return run_source_detection(g, comm, sources, H, K, trace_out);
}

}  // namespace bcc
