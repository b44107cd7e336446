#pragma once

#include <vector>

#include "bcc/shortcut.hpp"
#include "bcc/source_detect.hpp"

namespace bcc {

// Per-level integer reweighting w'_i(x,y) = ceil(2 h w'(x,y) / (eps D'_i)),
// eps = 1/eps_den, D'_i = 2^i. Levels may be negative: weights are multiples
// of 1/p, so distances below 1 need D' below 1 for a (1+eps) fit. All
// arithmetic exact.
struct RoundedWeights {
  int level = 0;
  std::int64_t h = 1;
  std::int64_t eps_den = 1;
  std::vector<std::int64_t> w;  // aligned with sg.combined_edges
};

// Single-edge formula: ceil((2 h q eps_den) / (p 2^i)) for weight q/p.
std::int64_t round_weight_num(std::int64_t q, std::int64_t p, std::int64_t h,
                              std::int64_t eps_den, int level);

RoundedWeights round_weights(const ShortcutGraph& sg, std::int64_t h, std::int64_t eps_den,
                             int level);

// Levels bottom_level(sg)..top_level(sg, h) carry every qualifying distance:
// the top D' covers min(h, n-1) * W (no finite h-hop distance is larger) and
// the bottom D' sits at or below the lightest edge (no distance is smaller).
int top_level(const ShortcutGraph& sg, std::int64_t h);
int bottom_level(const ShortcutGraph& sg);

// The structure at one level, ready for delay-simulated source detection.
IntGraph rounded_structure(const ShortcutGraph& sg, const RoundedWeights& rw);

}  // namespace bcc
