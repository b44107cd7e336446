#include "bcc/gen.hpp"

#include <algorithm>
#include <cmath>

#include "bcc/error.hpp"

namespace bcc {

WeightedGraph gen_random(int n, std::int64_t p, double density, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "node count must be positive");
  if (density < 0.0 || density > 1.0)
    throw Error(ErrorCode::InvalidDensity, "density must lie in [0, 1]");

  Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<char> used(static_cast<std::size_t>(n) * n, 0);
  auto mark = [&](NodeId u, NodeId v) { used[static_cast<std::size_t>(u) * n + v] = 1; };

  // Spanning tree: node i attaches to a uniform earlier node.
  for (NodeId i = 1; i < n; ++i) {
    NodeId j = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(i)));
    std::int64_t w = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(p * p)));
    edges.push_back({j, i, w});
    mark(std::min(i, j), std::max(i, j));
  }

  std::int64_t all_pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  std::int64_t target = std::max<std::int64_t>(
      n - 1, static_cast<std::int64_t>(std::llround(density * static_cast<double>(all_pairs))));
  std::int64_t extra = target - (n - 1);

  if (extra > 0) {
    std::vector<std::pair<NodeId, NodeId>> rest;
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v)
        if (!used[static_cast<std::size_t>(u) * n + v]) rest.push_back({u, v});
    rng.shuffle(rest);
    extra = std::min<std::int64_t>(extra, static_cast<std::int64_t>(rest.size()));
    for (std::int64_t i = 0; i < extra; ++i) {
      std::int64_t w = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(p * p)));
      edges.push_back({rest[i].first, rest[i].second, w});
    }
  }
  return WeightedGraph::make(n, p, std::move(edges));
}

}  // namespace bcc
