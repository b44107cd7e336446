#pragma once

#include <cstdint>

#include "bcc/graph.hpp"
#include "bcc/rng.hpp"

namespace bcc {

// Connected random graph: a random spanning tree first, then extra edges up
// to density * n(n-1)/2 total, weights uniform on {1..p^2}/p. Byte-identical
// output for identical (n, p, density, seed).
WeightedGraph gen_random(int n, std::int64_t p, double density, std::uint64_t seed);

}  // namespace bcc
