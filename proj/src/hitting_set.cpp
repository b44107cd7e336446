#include "bcc/hitting_set.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "bcc/error.hpp"

namespace bcc {

std::vector<NodeId> greedy_hitting_set(const std::vector<std::vector<NodeId>>& family, int n) {
  for (const auto& s : family)
    if (s.empty()) throw Error(ErrorCode::EmptySetInFamily, "every set must be non-empty");

  std::vector<char> covered(family.size(), 0);
  std::size_t uncovered = family.size();
  std::vector<NodeId> result;
  std::vector<std::int64_t> score(n);
  while (uncovered > 0) {
    std::fill(score.begin(), score.end(), 0);
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (covered[i]) continue;
      for (NodeId v : family[i]) score[v]++;
    }
    NodeId best = -1;
    for (NodeId v = 0; v < n; ++v)
      if (score[v] > 0 && (best < 0 || score[v] > score[best])) best = v;
    // Some uncovered set exists and is non-empty, so best is set.
    result.push_back(best);
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (covered[i]) continue;
      for (NodeId v : family[i])
        if (v == best) {
          covered[i] = 1;
          --uncovered;
          break;
        }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Adj> k_lightest_incident(const WeightedGraph& g, NodeId u, int k) {
  std::vector<Adj> inc(g.neighbors(u).begin(), g.neighbors(u).end());
  std::sort(inc.begin(), inc.end(), [](const Adj& a, const Adj& b) {
    return std::make_pair(a.num, a.to) < std::make_pair(b.num, b.to);
  });
  if (static_cast<int>(inc.size()) > k) inc.resize(k);
  return inc;
}

std::vector<std::vector<Adj>> k_lightest_union(const WeightedGraph& g, int k) {
  std::map<std::pair<NodeId, NodeId>, std::int64_t> edges;
  for (NodeId u = 0; u < g.n(); ++u) {
    for (const auto& a : k_lightest_incident(g, u, k)) {
      NodeId x = std::min(u, a.to), y = std::max(u, a.to);
      edges[{x, y}] = a.num;
    }
  }
  std::vector<std::vector<Adj>> adj(g.n());
  for (const auto& [key, num] : edges) {
    adj[key.first].push_back({key.second, num});
    adj[key.second].push_back({key.first, num});
  }
  return adj;
}

namespace {

// Dijkstra over an adjacency structure that may not reach every node.
std::vector<std::int64_t> dijkstra_adj(const std::vector<std::vector<Adj>>& adj, NodeId s) {
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

struct SetPick {
  std::vector<NodeId> members;      // (distance, id) order
  std::vector<std::int64_t> dists;  // aligned with members
};

SetPick closest_set(const std::vector<std::int64_t>& dist, int k) {
  std::vector<NodeId> order(dist.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<NodeId>(i);
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return std::make_pair(dist[a], a) < std::make_pair(dist[b], b);
  });
  SetPick pick;
  for (int i = 0; i < k; ++i) {
    pick.members.push_back(order[i]);
    pick.dists.push_back(dist[order[i]]);
  }
  return pick;
}

// Node program for the 2k-round schedule: rounds 1..k broadcast the i-th
// lightest incident edge, rounds k+1..2k broadcast the i-th closest-set
// entry. Every node then runs the same greedy on the collected family.
class HittingSetProgram : public NodeProgram {
 public:
  HittingSetProgram(NodeId me, int n, int k, std::vector<Adj> incident)
      : me_(me), n_(n), k_(k), incident_(std::move(incident)) {
    std::sort(incident_.begin(), incident_.end(), [](const Adj& a, const Adj& b) {
      return std::make_pair(a.num, a.to) < std::make_pair(b.num, b.to);
    });
    family_.resize(n_);
    family_dists_.resize(n_);
  }

  std::optional<Payload> on_send(std::int64_t round) override {
    if (round <= k_) {
      std::size_t i = static_cast<std::size_t>(round - 1);
      if (i < incident_.size())
        return Payload::edge(me_, incident_[i].to, incident_[i].num);
      return std::nullopt;
    }
    std::size_t i = static_cast<std::size_t>(round - k_ - 1);
    return Payload::set_entry(own_set_.members[i], own_set_.dists[i]);
  }

  void on_receive(std::int64_t round, const std::vector<Received>& inbox) override {
    if (round <= k_) {
      // Own broadcasts are part of the shared edge pool too.
      std::size_t i = static_cast<std::size_t>(round - 1);
      if (i < incident_.size()) add_edge(me_, incident_[i].to, incident_[i].num);
      for (const auto& r : inbox) add_edge(r.payload.a, r.payload.b, r.payload.num);
      if (round == k_) {
        auto adj = build_adj();
        own_set_ = closest_set(dijkstra_adj(adj, me_), k_);
      }
      return;
    }
    std::size_t i = static_cast<std::size_t>(round - k_ - 1);
    family_[me_].push_back(own_set_.members[i]);
    family_dists_[me_].push_back(own_set_.dists[i]);
    for (const auto& r : inbox) {
      family_[r.from].push_back(r.payload.a);
      family_dists_[r.from].push_back(r.payload.num);
    }
    if (round == 2 * k_) {
      result_ = greedy_hitting_set(family_, n_);
      halted_ = true;
    }
  }

  bool halted() const override { return halted_; }

  const std::vector<NodeId>& result() const { return result_; }
  const std::vector<std::vector<NodeId>>& family() const { return family_; }
  const std::vector<std::vector<std::int64_t>>& family_dists() const { return family_dists_; }

 private:
  void add_edge(NodeId u, NodeId v, std::int64_t num) {
    if (u > v) std::swap(u, v);
    pool_[{u, v}] = num;
  }

  std::vector<std::vector<Adj>> build_adj() const {
    std::vector<std::vector<Adj>> adj(n_);
    for (const auto& [key, num] : pool_) {
      adj[key.first].push_back({key.second, num});
      adj[key.second].push_back({key.first, num});
    }
    return adj;
  }

  NodeId me_;
  int n_;
  int k_;
  std::vector<Adj> incident_;
  std::map<std::pair<NodeId, NodeId>, std::int64_t> pool_;
  SetPick own_set_;
  std::vector<std::vector<NodeId>> family_;
  std::vector<std::vector<std::int64_t>> family_dists_;
  std::vector<NodeId> result_;
  bool halted_ = false;
};

}  // namespace

HittingSetResult hitting_set_reference(const WeightedGraph& g, int k) {
  if (k > g.n()) throw Error(ErrorCode::KTooLarge, "k exceeds node count");
  if (k < 1) throw Error(ErrorCode::InvalidParameter, "k must be positive");
  HittingSetResult res;
  res.family.resize(g.n());
  res.dists.resize(g.n());
  for (NodeId u = 0; u < g.n(); ++u) {
    auto pick = closest_set(dijkstra(g, u), k);
    res.family[u] = std::move(pick.members);
    res.dists[u] = std::move(pick.dists);
  }
  res.hitting_set = greedy_hitting_set(res.family, g.n());
  res.rounds_used = 0;
  return res;
}

HittingSetResult hitting_set_distributed(const WeightedGraph& g, int k,
                                         SimulationTrace* trace_out) {
  if (k > g.n()) throw Error(ErrorCode::KTooLarge, "k exceeds node count");
  if (k < 1) throw Error(ErrorCode::InvalidParameter, "k must be positive");

  std::vector<std::unique_ptr<NodeProgram>> programs;
  for (NodeId u = 0; u < g.n(); ++u) {
    std::vector<Adj> inc(g.neighbors(u).begin(), g.neighbors(u).end());
    programs.push_back(std::make_unique<HittingSetProgram>(u, g.n(), k, std::move(inc)));
  }
  auto cfg = SimConfig::make(Mode::BCC, g.n(), g.p(), Codec::for_graph(g.n(), g.p()));
  auto trace = run(programs, g, cfg);

  auto* first = static_cast<HittingSetProgram*>(programs[0].get());
  HittingSetResult res;
  res.hitting_set = first->result();
  res.family = first->family();
  res.dists = first->family_dists();
  res.rounds_used = trace.rounds;
  // Every node must have reached the same answer.
  for (NodeId u = 1; u < g.n(); ++u) {
    auto* prog = static_cast<HittingSetProgram*>(programs[u].get());
    if (prog->result() != res.hitting_set)
      throw Error(ErrorCode::InvalidParameter, "nodes disagree on the hitting set");
  }
  if (trace_out) *trace_out = std::move(trace);
  return res;
}

}  // namespace bcc
