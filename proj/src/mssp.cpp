#include "bcc/mssp.hpp"

#include <algorithm>
#include <queue>

#include "bcc/error.hpp"

namespace bcc {

std::int64_t source_detection_horizon(std::int64_t h, std::int64_t eps_den) {
  return (1 + 2 * eps_den) * h;
}

namespace {

void check_inputs(const ShortcutGraph& sg, const std::vector<NodeId>& hubs, std::int64_t h,
                  std::int64_t eps_den) {
  if (hubs.empty()) throw Error(ErrorCode::InvalidParameter, "hub set must be non-empty");
  if (h < 1 || eps_den < 1) throw Error(ErrorCode::InvalidParameter, "h and eps_den must be >= 1");
  for (NodeId r : hubs)
    if (r < 0 || r >= sg.n) throw Error(ErrorCode::IndexOutOfRange, "hub out of range");
}

MsspResult init_result(const ShortcutGraph& sg, std::vector<NodeId> hubs, std::int64_t h,
                       std::int64_t eps_den) {
  MsspResult res;
  std::sort(hubs.begin(), hubs.end());
  hubs.erase(std::unique(hubs.begin(), hubs.end()), hubs.end());
  res.sources = std::move(hubs);
  res.h = h;
  res.eps_den = eps_den;
  res.bottom = bottom_level(sg);
  res.levels = top_level(sg, h) - res.bottom + 1;
  res.est.assign(res.sources.size(),
                 std::vector<std::optional<LevelEstimate>>(static_cast<std::size_t>(sg.n)));
  return res;
}

void absorb_level(MsspResult& res, int level, std::size_t s_idx, NodeId u, std::int64_t raw) {
  auto& slot = res.est[s_idx][u];
  LevelEstimate cand{level, raw};
  if (!slot || cand.value(res.h, res.eps_den) < slot->value(res.h, res.eps_den)) slot = cand;
}

}  // namespace

MsspResult mssp_approx(const ShortcutGraph& sg, const std::vector<NodeId>& hubs, std::int64_t h,
                       std::int64_t eps_den) {
  check_inputs(sg, hubs, h, eps_den);
  MsspResult res = init_result(sg, hubs, h, eps_den);
  const std::int64_t H = source_detection_horizon(h, eps_den);

  std::vector<std::size_t> hub_index(sg.n, SIZE_MAX);
  for (std::size_t i = 0; i < res.sources.size(); ++i) hub_index[res.sources[i]] = i;

  for (int level = res.bottom; level < res.bottom + res.levels; ++level) {
    auto rw = round_weights(sg, h, eps_den, level);
    auto ig = rounded_structure(sg, rw);
    auto sd = weighted_source_detection(ig, res.sources, H,
                                        static_cast<std::int64_t>(res.sources.size()));
    res.total_rounds += sd.rounds;
    for (NodeId u = 0; u < sg.n; ++u)
      for (const auto& e : sd.lists[u]) absorb_level(res, level, hub_index[e.source], u, e.dist);
  }
  return res;
}

MsspResult mssp_reference(const ShortcutGraph& sg, const std::vector<NodeId>& hubs,
                          std::int64_t h, std::int64_t eps_den) {
  check_inputs(sg, hubs, h, eps_den);
  MsspResult res = init_result(sg, hubs, h, eps_den);
  const std::int64_t H = source_detection_horizon(h, eps_den);

  for (int level = res.bottom; level < res.bottom + res.levels; ++level) {
    auto rw = round_weights(sg, h, eps_den, level);
    auto ig = rounded_structure(sg, rw);
    for (std::size_t s_idx = 0; s_idx < res.sources.size(); ++s_idx) {
      // Dijkstra capped at H.
      const std::int64_t inf = INT64_MAX;
      std::vector<std::int64_t> dist(ig.n, inf);
      using Item = std::pair<std::int64_t, NodeId>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
      dist[res.sources[s_idx]] = 0;
      pq.push({0, res.sources[s_idx]});
      while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d != dist[u]) continue;
        for (const auto& a : ig.adj[u]) {
          std::int64_t nd = d + a.num;
          if (nd <= H && nd < dist[a.to]) {
            dist[a.to] = nd;
            pq.push({nd, a.to});
          }
        }
      }
      for (NodeId u = 0; u < ig.n; ++u)
        if (dist[u] != inf) absorb_level(res, level, s_idx, u, dist[u]);
    }
  }
  return res;
}

}  // namespace bcc
