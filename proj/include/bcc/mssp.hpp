#pragma once

#include <optional>
#include <vector>

#include "bcc/rounding.hpp"
#include "bcc/shortcut.hpp"

namespace bcc {

// Estimate for one (source, node) pair: the winning level and the raw
// distance under that level's weights. Rescaled value is
// raw * 2^level / (2 h eps_den), exact; levels may be negative.
struct LevelEstimate {
  int level;
  std::int64_t raw;

  Rat value(std::int64_t h, std::int64_t eps_den) const {
    if (level >= 0) return Rat((static_cast<std::int64_t>(1) << level) * raw, 2 * h * eps_den);
    return Rat(raw, (2 * h * eps_den) << -level);
  }
};

struct MsspResult {
  std::vector<NodeId> sources;  // ascending
  std::int64_t h = 1;
  std::int64_t eps_den = 1;
  int bottom = 0;  // first level scanned (bottom_level)
  int levels = 0;  // number of levels scanned
  // est[s_idx][u]: estimate of the h-hop distance from sources[s_idx] to u,
  // empty when no level qualified (Unreachable).
  std::vector<std::vector<std::optional<LevelEstimate>>> est;
  std::int64_t total_rounds = 0;

  std::optional<Rat> value(std::size_t s_idx, NodeId u) const {
    const auto& e = est[s_idx][u];
    if (!e) return std::nullopt;
    return e->value(h, eps_den);
  }
};

// Per level i in [0, top_level]: run (R, H, |R|)-source detection with
// H = (1 + 2 eps_den) h on the level's integer weights, keep distances
// within H, then take the minimum rescaled value across qualifying levels.
MsspResult mssp_approx(const ShortcutGraph& sg, const std::vector<NodeId>& hubs, std::int64_t h,
                       std::int64_t eps_den);

// Same mathematics without the simulator: capped Dijkstra per level.
MsspResult mssp_reference(const ShortcutGraph& sg, const std::vector<NodeId>& hubs,
                          std::int64_t h, std::int64_t eps_den);

std::int64_t source_detection_horizon(std::int64_t h, std::int64_t eps_den);  // (1+2*eps_den)*h

}  // namespace bcc
