#include "bcc/shortcut.hpp"

#include <algorithm>
#include <map>

#include "bcc/error.hpp"

namespace bcc {

ShortcutGraph combine_shortcuts(int n, std::int64_t p, int k,
                                std::vector<std::vector<NodeId>> family,
                                std::vector<std::vector<std::int64_t>> family_dists,
                                const std::vector<Edge>& known_edges) {
  ShortcutGraph sg;
  sg.n = n;
  sg.p = p;
  sg.k = k;
  sg.family = std::move(family);
  sg.family_dists = std::move(family_dists);

  // Ball membership with distances: ball_dist[z*n+v] = d(z,v) if v in S^k(z).
  const std::int64_t unset = -1;
  std::vector<std::int64_t> ball_dist(static_cast<std::size_t>(n) * n, unset);
  for (NodeId z = 0; z < n; ++z)
    for (std::size_t i = 0; i < sg.family[z].size(); ++i)
      ball_dist[static_cast<std::size_t>(z) * n + sg.family[z][i]] = sg.family_dists[z][i];

  for (NodeId u = 0; u < n; ++u)
    for (std::size_t i = 0; i < sg.family[u].size(); ++i) {
      NodeId v = sg.family[u][i];
      if (v != u) sg.shortcut_edges.push_back({u, v, sg.family_dists[u][i]});
    }

  std::map<std::pair<NodeId, NodeId>, std::int64_t> pool;
  for (const auto& e : known_edges) {
    NodeId x = std::min(e.u, e.v), y = std::max(e.u, e.v);
    pool[{x, y}] = e.num;
  }

  // Candidate pairs: known edges plus shortcut pairs.
  std::map<std::pair<NodeId, NodeId>, std::int64_t> combined = pool;
  for (const auto& e : sg.shortcut_edges) {
    NodeId x = std::min(e.u, e.v), y = std::max(e.u, e.v);
    auto it = combined.find({x, y});
    if (it == combined.end() || e.num < it->second) combined[{x, y}] = e.num;
  }

  auto oriented_min = [&](NodeId x, NodeId y) {
    std::int64_t best = INT64_MAX;
    const auto& fam = sg.family[x];
    const auto& fd = sg.family_dists[x];
    for (std::size_t i = 0; i < fam.size(); ++i) {
      std::int64_t dzy = ball_dist[static_cast<std::size_t>(fam[i]) * n + y];
      if (dzy == unset) continue;
      best = std::min(best, fd[i] + dzy);
    }
    return best;
  };

  for (auto& [key, num] : combined) {
    std::int64_t w = num;
    w = std::min(w, oriented_min(key.first, key.second));
    w = std::min(w, oriented_min(key.second, key.first));
    num = w;
  }

  sg.adj.resize(n);
  for (const auto& [key, num] : combined) {
    sg.combined_edges.push_back({key.first, key.second, num});
    sg.adj[key.first].push_back({key.second, num});
    sg.adj[key.second].push_back({key.first, num});
    sg.max_weight_num = std::max(sg.max_weight_num, num);
  }
  return sg;
}

ShortcutGraph build_shortcut_graph(const WeightedGraph& g, int k) {
  if (k > g.n()) throw Error(ErrorCode::KTooLarge, "k exceeds node count");
  if (k < 1) throw Error(ErrorCode::InvalidParameter, "k must be positive");
  std::vector<std::vector<NodeId>> family(g.n());
  std::vector<std::vector<std::int64_t>> dists(g.n());
  for (NodeId u = 0; u < g.n(); ++u) {
    auto d = dijkstra(g, u);
    auto members = k_closest(d, k);
    family[u] = members;
    for (NodeId v : members) dists[u].push_back(d[v]);
  }
  return combine_shortcuts(g.n(), g.p(), k, std::move(family), std::move(dists), g.edges());
}

}  // namespace bcc
