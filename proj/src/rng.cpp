#include "bcc/rng.hpp"

namespace bcc {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  std::uint64_t mask = bound - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    std::uint64_t x = next() & mask;
    if (x < bound) return x;
  }
}

}  // namespace bcc
