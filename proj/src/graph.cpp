#include "bcc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>

#include "bcc/error.hpp"

namespace bcc {

WeightedGraph WeightedGraph::make(int n, std::int64_t p, std::vector<Edge> edges) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "node count must be positive");
  if (p < 1) throw Error(ErrorCode::InvalidParameter, "denominator must be positive");
  // Path numerators reach n*p^2; keep them well inside the signed 63-bit range.
  __int128 cap = static_cast<__int128>(n) * p * p;
  if (cap > (static_cast<__int128>(1) << 62))
    throw Error(ErrorCode::InvalidParameter, "n*p^2 exceeds the exact-arithmetic budget");

  std::vector<std::vector<Adj>> adj(n);
  std::map<std::pair<NodeId, NodeId>, bool> seen;
  for (auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw Error(ErrorCode::IndexOutOfRange, "edge endpoint out of range");
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "self loop at node " + std::to_string(e.u));
    if (e.num < 1 || e.num > p * p)
      throw Error(ErrorCode::WeightOutOfRange,
                  "weight numerator " + std::to_string(e.num) + " outside [1, p^2]");
    if (e.u > e.v) std::swap(e.u, e.v);
    auto key = std::make_pair(e.u, e.v);
    if (seen.count(key))
      throw Error(ErrorCode::DuplicateEdge,
                  "duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    seen[key] = true;
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  for (const auto& e : edges) {
    adj[e.u].push_back({e.v, e.num});
    adj[e.v].push_back({e.u, e.num});
  }

  // Connectivity (BFS from node 0).
  std::vector<char> vis(n, 0);
  std::queue<NodeId> q;
  q.push(0);
  vis[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    NodeId u = q.front();
    q.pop();
    for (const auto& a : adj[u]) {
      if (!vis[a.to]) {
        vis[a.to] = 1;
        ++reached;
        q.push(a.to);
      }
    }
  }
  if (reached != n) throw Error(ErrorCode::Disconnected, "graph is not connected");

  WeightedGraph g;
  g.n_ = n;
  g.p_ = p;
  g.edges_ = std::move(edges);
  g.adj_ = std::move(adj);
  return g;
}

std::string WeightedGraph::to_text() const {
  std::ostringstream os;
  os << n_ << " " << edges_.size() << " " << p_ << "\n";
  for (const auto& e : edges_) os << e.u << " " << e.v << " " << e.num << "\n";
  return os.str();
}

WeightedGraph WeightedGraph::from_text(const std::string& text) {
  std::istringstream is(text);
  long long n, m, p;
  if (!(is >> n >> m >> p)) throw Error(ErrorCode::IoError, "bad graph header");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u, v, q;
    if (!(is >> u >> v >> q)) throw Error(ErrorCode::IoError, "bad edge line");
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), q});
  }
  return make(static_cast<int>(n), p, std::move(edges));
}

WeightedGraph WeightedGraph::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return from_text(ss.str());
}

void WeightedGraph::save(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot write " + path);
  f << to_text();
}

std::vector<std::int64_t> dijkstra(const WeightedGraph& g, NodeId s) {
  const std::int64_t inf = INT64_MAX;
  std::vector<std::int64_t> dist(g.n(), inf);
  using Item = std::pair<std::int64_t, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[s] = 0;
  pq.push({0, s});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != dist[u]) continue;
    for (const auto& a : g.neighbors(u)) {
      std::int64_t nd = d + a.num;
      if (nd < dist[a.to]) {
        dist[a.to] = nd;
        pq.push({nd, a.to});
      }
    }
  }
  return dist;
}

DistanceMatrix exact_apsp(const WeightedGraph& g) {
  DistanceMatrix m;
  m.n = g.n();
  m.p = g.p();
  m.num.resize(static_cast<std::size_t>(g.n()) * g.n());
  for (NodeId s = 0; s < g.n(); ++s) {
    auto d = dijkstra(g, s);
    for (NodeId v = 0; v < g.n(); ++v) m.at(s, v) = d[v];
  }
  return m;
}

Rat exact_diameter(const WeightedGraph& g) {
  auto m = exact_apsp(g);
  std::int64_t best = 0;
  for (auto d : m.num) best = std::max(best, d);
  return Rat(best, g.p());
}

std::vector<NodeId> k_closest(const std::vector<std::int64_t>& dist_from_u, int k) {
  std::vector<NodeId> order(dist_from_u.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<NodeId>(i);
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return std::make_pair(dist_from_u[a], a) < std::make_pair(dist_from_u[b], b);
  });
  order.resize(k);
  return order;
}

std::vector<NodeId> k_closest(const WeightedGraph& g, NodeId u, int k) {
  if (k > g.n()) throw Error(ErrorCode::KTooLarge, "k exceeds node count");
  if (k < 1) throw Error(ErrorCode::InvalidParameter, "k must be positive");
  return k_closest(dijkstra(g, u), k);
}

std::vector<std::optional<std::int64_t>> h_hop_distances(const WeightedGraph& g, NodeId u,
                                                         std::int64_t h) {
  if (h < 0) throw Error(ErrorCode::InvalidParameter, "hop budget must be non-negative");
  const std::int64_t inf = INT64_MAX;
  std::vector<std::int64_t> cur(g.n(), inf), nxt;
  cur[u] = 0;
  std::int64_t steps = std::min<std::int64_t>(h, g.n() - 1);
  for (std::int64_t it = 0; it < steps; ++it) {
    nxt = cur;
    bool changed = false;
    for (const auto& e : g.edges()) {
      if (cur[e.u] != inf && cur[e.u] + e.num < nxt[e.v]) {
        nxt[e.v] = cur[e.u] + e.num;
        changed = true;
      }
      if (cur[e.v] != inf && cur[e.v] + e.num < nxt[e.u]) {
        nxt[e.u] = cur[e.v] + e.num;
        changed = true;
      }
    }
    cur.swap(nxt);
    if (!changed) break;
  }
  std::vector<std::optional<std::int64_t>> out(g.n());
  for (NodeId v = 0; v < g.n(); ++v)
    if (cur[v] != inf) out[v] = cur[v];
  return out;
}

std::optional<std::int64_t> h_hop_distance(const WeightedGraph& g, NodeId u, NodeId v,
                                           std::int64_t h) {
  return h_hop_distances(g, u, h)[v];
}

int hop_diameter(const WeightedGraph& g) {
  int best = 0;
  std::vector<int> dist(g.n());
  for (NodeId s = 0; s < g.n(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<NodeId> q;
    q.push(s);
    dist[s] = 0;
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop();
      best = std::max(best, dist[u]);
      for (const auto& a : g.neighbors(u)) {
        if (dist[a.to] < 0) {
          dist[a.to] = dist[u] + 1;
          q.push(a.to);
        }
      }
    }
  }
  return best;
}

}  // namespace bcc
