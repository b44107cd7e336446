#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace bcc {

// Exact non-negative rational. All distance/estimate comparisons in this
// project go through this type; no floating point touches a distance.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n, std::int64_t d) : num(n), den(d) {}

  static Rat zero() { return Rat(0, 1); }

  Rat normalized() const {
    std::int64_t g = std::gcd(num, den);
    if (g == 0) return Rat(0, 1);
    return Rat(num / g, den / g);
  }

  // Cross-multiplied comparisons; 128-bit intermediates so callers never
  // have to reason about overflow of num*den products.
  friend bool operator==(const Rat& a, const Rat& b) {
    return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return a < b || a == b; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

  Rat operator+(const Rat& o) const;
  Rat operator*(const Rat& o) const;

  std::string str() const;
};

// Integer helpers shared by the weight-rounding code.
std::int64_t ceil_div(std::int64_t a, std::int64_t b);
int ceil_log2(std::int64_t x);  // smallest i with 2^i >= x, x >= 1

}  // namespace bcc
