#include "bcc/apsp.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "bcc/error.hpp"
#include "bcc/hitting_set.hpp"
#include "bcc/source_detect.hpp"

namespace bcc {

ApspParams ApspParams::for_n(int n) {
  int k = 1;
  while (k * k < n) ++k;  // ceil(sqrt(n))
  ApspParams p;
  p.k = std::min(k, n);
  p.h = 4 * static_cast<std::int64_t>(k);
  p.eps_den = std::max(1, ceil_log2(n));
  return p;
}

namespace {

std::vector<std::int64_t> dijkstra_pool(const std::vector<std::vector<Adj>>& adj, NodeId s) {
  const std::int64_t inf = INT64_MAX;
  std::vector<std::int64_t> dist(adj.size(), inf);
  using Item = std::pair<std::int64_t, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[s] = 0;
  pq.push({0, s});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != dist[u]) continue;
    for (const auto& a : adj[u]) {
      std::int64_t nd = d + a.num;
      if (nd < dist[a.to]) {
        dist[a.to] = nd;
        pq.push({nd, a.to});
      }
    }
  }
  return dist;
}

// Shared final combination: one table row per node (distance estimates to
// every hub), plus the globally known combined edge weights.
ApproxDistanceMatrix combine_estimates(
    const ShortcutGraph& sg, const std::vector<NodeId>& hubs,
    const std::vector<std::vector<std::optional<LevelEstimate>>>& table, std::int64_t h,
    std::int64_t eps_den) {
  const int n = sg.n;
  ApproxDistanceMatrix m;
  m.n = n;
  m.est.assign(static_cast<std::size_t>(n) * n, std::nullopt);
  m.tag.assign(static_cast<std::size_t>(n) * n, Provenance::Diagonal);
  m.hub.assign(static_cast<std::size_t>(n) * n, -1);

  std::map<std::pair<NodeId, NodeId>, std::int64_t> known;
  for (const auto& e : sg.combined_edges) known[{e.u, e.v}] = e.num;

  for (NodeId u = 0; u < n; ++u) {
    m.est[m.idx(u, u)] = Rat(0, 1);
    for (NodeId v = u + 1; v < n; ++v) {
      std::optional<Rat> best;
      Provenance tag = Provenance::Shortcut;
      NodeId hub = -1;

      auto it = known.find({u, v});
      if (it != known.end()) best = Rat(it->second, sg.p);

      for (std::size_t r = 0; r < hubs.size(); ++r) {
        const auto& eu = table[u][r];
        const auto& ev = table[v][r];
        if (!eu || !ev) continue;
        Rat cand = eu->value(h, eps_den) + ev->value(h, eps_den);
        if (!best || cand < *best) {
          best = cand;
          tag = Provenance::ViaHub;
          hub = hubs[r];
        }
      }
      if (best) {
        Rat norm = best->normalized();
        m.est[m.idx(u, v)] = norm;
        m.est[m.idx(v, u)] = norm;
        m.tag[m.idx(u, v)] = tag;
        m.tag[m.idx(v, u)] = tag;
        m.hub[m.idx(u, v)] = hub;
        m.hub[m.idx(v, u)] = hub;
      }
    }
  }
  return m;
}

struct Schedule {
  int k;
  std::int64_t h;
  std::int64_t eps_den;
  std::int64_t horizon;  // H for every level's source detection
};

// Runs the whole pipeline as one node program. Phase boundaries:
//   rounds [1, k]                     lightest incident edges
//   rounds (k, 2k]                    closest-set entries
//   rounds (2k, 2k + L*(H+|R|)]       source detection, one window per level
//   rounds (.., .. + |R|]             hub distance broadcasts
class ApspProgram : public NodeProgram {
 public:
  ApspProgram(NodeId me, int n, std::int64_t p, Schedule sch, std::vector<Adj> incident)
      : me_(me), n_(n), p_(p), sch_(sch), incident_(std::move(incident)) {
    std::sort(incident_.begin(), incident_.end(), [](const Adj& a, const Adj& b) {
      return std::make_pair(a.num, a.to) < std::make_pair(b.num, b.to);
    });
    family_.resize(n_);
    family_dists_.resize(n_);
  }

  std::optional<Payload> on_send(std::int64_t round) override {
    const int k = sch_.k;
    if (round <= k) {
      std::size_t i = static_cast<std::size_t>(round - 1);
      if (i < incident_.size()) return Payload::edge(me_, incident_[i].to, incident_[i].num);
      return std::nullopt;
    }
    if (round <= 2 * k) {
      std::size_t i = static_cast<std::size_t>(round - k - 1);
      return Payload::set_entry(own_members_[i], own_dists_[i]);
    }
    if (round <= detect_end_) {
      return core_.next_broadcast(level_clock(round));
    }
    std::size_t j = static_cast<std::size_t>(round - detect_end_ - 1);
    if (my_row_[j])  // levels ride the wire offset by bottom_, which every node knows
      return Payload::hub_dist(hubs_[j], my_row_[j]->level - bottom_, my_row_[j]->raw);
    return std::nullopt;
  }

  void on_receive(std::int64_t round, const std::vector<Received>& inbox) override {
    const int k = sch_.k;
    if (round <= k) {
      std::size_t i = static_cast<std::size_t>(round - 1);
      if (i < incident_.size()) add_pool_edge(me_, incident_[i].to, incident_[i].num);
      for (const auto& r : inbox) add_pool_edge(r.payload.a, r.payload.b, r.payload.num);
      if (round == k) finish_edge_phase();
      return;
    }
    if (round <= 2 * k) {
      std::size_t i = static_cast<std::size_t>(round - k - 1);
      family_[me_].push_back(own_members_[i]);
      family_dists_[me_].push_back(own_dists_[i]);
      for (const auto& r : inbox) {
        family_[r.from].push_back(r.payload.a);
        family_dists_[r.from].push_back(r.payload.num);
      }
      if (round == 2 * k) finish_set_phase();
      return;
    }
    if (round <= detect_end_) {
      std::int64_t t = level_clock(round);
      for (const auto& r : inbox) {
        std::int64_t w = level_weight_[r.from];
        if (w < 0) continue;  // not a shortcut-graph neighbor
        core_.deliver(t, r.payload.hop, r.payload.a, w);
      }
      if (t == per_level_rounds_) finish_level();
      return;
    }
    std::size_t j = static_cast<std::size_t>(round - detect_end_ - 1);
    for (const auto& r : inbox)
      table_[r.from][j] = LevelEstimate{r.payload.level + bottom_, r.payload.hop};
    table_[me_][j] = my_row_[j];
    if (j + 1 == hubs_.size()) {
      matrix_ = combine_estimates(sg_, hubs_, table_, sch_.h, sch_.eps_den);
      halted_ = true;
    }
  }

  bool halted() const override { return halted_; }

  const ApproxDistanceMatrix& matrix() const { return matrix_; }
  const std::vector<NodeId>& hubs() const { return hubs_; }
  int levels() const { return levels_; }

 private:
  std::int64_t level_clock(std::int64_t round) const {
    return (round - 2 * sch_.k - 1) % per_level_rounds_ + 1;
  }

  void add_pool_edge(NodeId u, NodeId v, std::int64_t num) {
    if (u > v) std::swap(u, v);
    pool_[{u, v}] = num;
  }

  void finish_edge_phase() {
    std::vector<std::vector<Adj>> adj(n_);
    for (const auto& [key, num] : pool_) {
      adj[key.first].push_back({key.second, num});
      adj[key.second].push_back({key.first, num});
    }
    auto dist = dijkstra_pool(adj, me_);
    std::vector<NodeId> order(n_);
    for (NodeId v = 0; v < n_; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
      return std::make_pair(dist[a], a) < std::make_pair(dist[b], b);
    });
    own_members_.assign(order.begin(), order.begin() + sch_.k);
    for (NodeId v : own_members_) own_dists_.push_back(dist[v]);
  }

  void finish_set_phase() {
    hubs_ = greedy_hitting_set(family_, n_);
    std::vector<Edge> pool_edges;
    for (const auto& [key, num] : pool_) pool_edges.push_back({key.first, key.second, num});
    sg_ = combine_shortcuts(n_, p_, sch_.k, family_, family_dists_, pool_edges);
    bottom_ = bottom_level(sg_);
    levels_ = top_level(sg_, sch_.h) - bottom_ + 1;
    per_level_rounds_ = sch_.horizon + static_cast<std::int64_t>(hubs_.size());
    detect_end_ = 2 * sch_.k + levels_ * per_level_rounds_;
    my_row_.assign(hubs_.size(), std::nullopt);
    table_.assign(n_, std::vector<std::optional<LevelEstimate>>(hubs_.size()));
    is_hub_ = std::binary_search(hubs_.begin(), hubs_.end(), me_);
    start_level(bottom_);
  }

  void start_level(int level) {
    current_level_ = level;
    core_ = SourceDetectCore(me_, is_hub_, sch_.horizon,
                             static_cast<std::int64_t>(hubs_.size()));
    level_weight_.assign(n_, -1);
    for (const auto& a : sg_.adj[me_])
      level_weight_[a.to] = round_weight_num(a.num, p_, sch_.h, sch_.eps_den, level);
  }

  void finish_level() {
    core_.finish(per_level_rounds_);
    for (const auto& e : core_.list(static_cast<std::int64_t>(hubs_.size()))) {
      std::size_t r = static_cast<std::size_t>(
          std::lower_bound(hubs_.begin(), hubs_.end(), e.source) - hubs_.begin());
      LevelEstimate cand{current_level_, e.dist};
      if (!my_row_[r] ||
          cand.value(sch_.h, sch_.eps_den) < my_row_[r]->value(sch_.h, sch_.eps_den))
        my_row_[r] = cand;
    }
    if (current_level_ + 1 < bottom_ + levels_) start_level(current_level_ + 1);
  }

  NodeId me_;
  int n_;
  std::int64_t p_;
  Schedule sch_;
  std::vector<Adj> incident_;

  std::map<std::pair<NodeId, NodeId>, std::int64_t> pool_;
  std::vector<NodeId> own_members_;
  std::vector<std::int64_t> own_dists_;
  std::vector<std::vector<NodeId>> family_;
  std::vector<std::vector<std::int64_t>> family_dists_;

  std::vector<NodeId> hubs_;
  ShortcutGraph sg_;
  int bottom_ = 0;
  int levels_ = 0;
  std::int64_t per_level_rounds_ = 0;
  std::int64_t detect_end_ = 0;
  bool is_hub_ = false;
  int current_level_ = 0;
  SourceDetectCore core_;
  std::vector<std::int64_t> level_weight_;
  std::vector<std::optional<LevelEstimate>> my_row_;
  std::vector<std::vector<std::optional<LevelEstimate>>> table_;

  ApproxDistanceMatrix matrix_;
  bool halted_ = false;
};

int bounded_level_count(int n, std::int64_t p, std::int64_t h) {
  // Worst case: top level if every combined weight hit the n*p^2 cap, plus
  // the downward extension to the smallest representable weight 1/p.
  __int128 target = static_cast<__int128>(std::min<std::int64_t>(h, std::max(1, n - 1))) * n * p * p;
  int top = 0;
  while ((static_cast<__int128>(p) << top) < target) ++top;
  return top + ceil_log2(p) + 2;
}

}  // namespace

ApspResult apsp_approx(const WeightedGraph& g, SimulationTrace* trace_out) {
  const int n = g.n();
  auto params = ApspParams::for_n(n);
  Schedule sch{params.k, params.h, params.eps_den,
               source_detection_horizon(params.h, params.eps_den)};

  std::vector<std::unique_ptr<NodeProgram>> programs;
  for (NodeId u = 0; u < n; ++u) {
    std::vector<Adj> inc(g.neighbors(u).begin(), g.neighbors(u).end());
    programs.push_back(std::make_unique<ApspProgram>(u, n, g.p(), sch, std::move(inc)));
  }

  auto codec = Codec::for_graph(n, g.p(), sch.horizon, bounded_level_count(n, g.p(), sch.h));
  int bits = default_message_bits(n, g.p());
  for (auto kind : {PayloadKind::Edge, PayloadKind::SetEntry, PayloadKind::SourceAnn,
                    PayloadKind::HubDist})
    bits = std::max(bits, codec.size_bits(kind));
  auto cfg = SimConfig::make(Mode::BCC, n, g.p(), codec, bits);
  cfg.max_rounds = 2 * sch.k +
                   static_cast<std::int64_t>(bounded_level_count(n, g.p(), sch.h)) *
                       (sch.horizon + n) +
                   n + 16;
  auto trace = run(programs, g, cfg);

  auto* first = static_cast<ApspProgram*>(programs[0].get());
  ApspResult res;
  res.matrix = first->matrix();
  res.hitting_set = first->hubs();
  res.k = params.k;
  res.h = params.h;
  res.eps_den = params.eps_den;
  res.levels = first->levels();
  res.rounds = trace.rounds;

  // Agreement check: every node computed the same matrix (bounded cost).
  if (n <= 64) {
    for (NodeId u = 1; u < n; ++u) {
      auto* prog = static_cast<ApspProgram*>(programs[u].get());
      if (prog->matrix().est != res.matrix.est)
        throw Error(ErrorCode::InvalidParameter, "nodes disagree on the estimate matrix");
    }
  }
  if (trace_out) *trace_out = std::move(trace);
  return res;
}

ApspResult apsp_reference(const WeightedGraph& g) {
  const int n = g.n();
  auto params = ApspParams::for_n(n);

  std::vector<std::vector<NodeId>> family(n);
  std::vector<std::vector<std::int64_t>> dists(n);
  for (NodeId u = 0; u < n; ++u) {
    auto d = dijkstra(g, u);
    family[u] = k_closest(d, params.k);
    for (NodeId v : family[u]) dists[u].push_back(d[v]);
  }
  auto hubs = greedy_hitting_set(family, n);

  std::vector<Edge> pool_edges;
  auto pool_adj = k_lightest_union(g, params.k);
  for (NodeId u = 0; u < n; ++u)
    for (const auto& a : pool_adj[u])
      if (u < a.to) pool_edges.push_back({u, a.to, a.num});
  auto sg = combine_shortcuts(n, g.p(), params.k, std::move(family), std::move(dists),
                              pool_edges);

  auto mssp = mssp_reference(sg, hubs, params.h, params.eps_den);
  std::vector<std::vector<std::optional<LevelEstimate>>> table(
      n, std::vector<std::optional<LevelEstimate>>(hubs.size()));
  for (std::size_t r = 0; r < hubs.size(); ++r)
    for (NodeId u = 0; u < n; ++u) table[u][r] = mssp.est[r][u];

  ApspResult res;
  res.matrix = combine_estimates(sg, hubs, table, params.h, params.eps_den);
  res.hitting_set = hubs;
  res.k = params.k;
  res.h = params.h;
  res.eps_den = params.eps_den;
  res.levels = mssp.levels;
  res.rounds = 0;
  return res;
}

Rat diameter_estimate(const ApproxDistanceMatrix& m) {
  Rat best = Rat::zero();
  for (const auto& e : m.est) {
    if (!e) throw Error(ErrorCode::InvalidParameter, "estimate matrix has an unreachable entry");
    if (*e > best) best = *e;
  }
  return best;
}

}  // namespace bcc
