#include "bcc/rat.hpp"

#include "bcc/error.hpp"

namespace bcc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::MessageTooLarge: return "MessageTooLarge";
    case ErrorCode::RoundLimitExceeded: return "RoundLimitExceeded";
    case ErrorCode::MalformedBits: return "MalformedBits";
    case ErrorCode::EmptySetInFamily: return "EmptySetInFamily";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidDensity: return "InvalidDensity";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

Rat reduce128(__int128 n, __int128 d) {
  __int128 g = gcd128(n, d);
  if (g == 0) g = 1;
  n /= g;
  d /= g;
  if (n > INT64_MAX || d > INT64_MAX)
    throw Error(ErrorCode::InvalidParameter, "rational overflow");
  return Rat(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
}

}  // namespace

Rat Rat::operator+(const Rat& o) const {
  __int128 n = static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den;
  __int128 d = static_cast<__int128>(den) * o.den;
  return reduce128(n, d);
}

Rat Rat::operator*(const Rat& o) const {
  __int128 n = static_cast<__int128>(num) * o.num;
  __int128 d = static_cast<__int128>(den) * o.den;
  return reduce128(n, d);
}

std::string Rat::str() const {
  Rat r = normalized();
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return (a + b - 1) / b;
}

int ceil_log2(std::int64_t x) {
  int i = 0;
  std::int64_t v = 1;
  while (v < x) {
    v <<= 1;
    ++i;
  }
  return i;
}

}  // namespace bcc
