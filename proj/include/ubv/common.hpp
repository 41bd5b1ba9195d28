#pragma once
// Shared integer helpers: overflow-checked arithmetic, integer square root,
// and the error type for memory-budget violations.

#include <charconv>
#include <cstdint>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ubv {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Thrown when a requested computation would exceed the configured memory budget.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// a*b with overflow detection; returns false on overflow.
inline bool checked_mul(u64 a, u64 b, u64& out) {
  return !__builtin_mul_overflow(a, b, &out);
}

inline bool checked_add(u64 a, u64 b, u64& out) {
  return !__builtin_add_overflow(a, b, &out);
}

namespace detail {

// Shortest decimal string that round-trips exactly to x.
inline std::string shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view sv) {
  double x = 0;
  auto res = std::from_chars(sv.data(), sv.data() + sv.size(), x);
  if (res.ec != std::errc() || res.ptr != sv.data() + sv.size())
    throw std::invalid_argument("bad decimal double field: " + std::string(sv));
  return x;
}

}  // namespace detail

// floor(sqrt(n)), exact for all u64 (double sqrt + fixup).
inline u64 isqrt(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

}  // namespace ubv
