#include "bcc/rounding.hpp"

#include <algorithm>

#include "bcc/error.hpp"

namespace bcc {

std::int64_t round_weight_num(std::int64_t q, std::int64_t p, std::int64_t h,
                              std::int64_t eps_den, int level) {
  if (q < 1 || p < 1 || h < 1 || eps_den < 1)
    throw Error(ErrorCode::InvalidParameter, "bad rounding parameters");
  __int128 numer = static_cast<__int128>(2) * h * q * eps_den;
  __int128 denom = p;
  if (level >= 0)
    denom <<= level;
  else
    numer <<= -level;
  __int128 r = (numer + denom - 1) / denom;
  if (r > INT64_MAX) throw Error(ErrorCode::InvalidParameter, "rounded weight overflow");
  return static_cast<std::int64_t>(r);
}

RoundedWeights round_weights(const ShortcutGraph& sg, std::int64_t h, std::int64_t eps_den,
                             int level) {
  RoundedWeights rw;
  rw.level = level;
  rw.h = h;
  rw.eps_den = eps_den;
  rw.w.reserve(sg.combined_edges.size());
  for (const auto& e : sg.combined_edges)
    rw.w.push_back(round_weight_num(e.num, sg.p, h, eps_den, level));
  return rw;
}

int top_level(const ShortcutGraph& sg, std::int64_t h) {
  // Smallest i with 2^i >= min(h, n-1) * W, W = max combined weight (q/p).
  std::int64_t hops = std::max<std::int64_t>(1, std::min<std::int64_t>(h, sg.n - 1));
  __int128 target = static_cast<__int128>(hops) * sg.max_weight_num;  // over denominator p
  int i = 0;
  while ((static_cast<__int128>(sg.p) << i) < target) ++i;
  return i;
}

int bottom_level(const ShortcutGraph& sg) {
  // Smallest distance in the graph is the lightest edge; the best level for
  // a distance d is the smallest i with 2^i >= d, so nothing below this one
  // can ever win the rescaled minimum.
  std::int64_t q_min = sg.max_weight_num;
  for (const auto& e : sg.combined_edges) q_min = std::min(q_min, e.num);
  if (q_min < 1) q_min = 1;
  int i = 0;
  while ((static_cast<__int128>(q_min) << -i) < sg.p) --i;  // 2^i >= q_min/p
  return i;
}

IntGraph rounded_structure(const ShortcutGraph& sg, const RoundedWeights& rw) {
  IntGraph ig;
  ig.n = sg.n;
  ig.adj.resize(sg.n);
  for (std::size_t i = 0; i < sg.combined_edges.size(); ++i) {
    const auto& e = sg.combined_edges[i];
    ig.adj[e.u].push_back({e.v, rw.w[i]});
    ig.adj[e.v].push_back({e.u, rw.w[i]});
  }
  return ig;
}

}  // namespace bcc
