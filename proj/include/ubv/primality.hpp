#pragma once
// Miller-Rabin primality: deterministic for 64-bit inputs (fixed witness set
// proven complete for n < 3.3 * 10^24), probabilistic with 64 rounds for
// larger integers (error probability < 2^-128).

#include <limits>
#include <random>

#include <boost/multiprecision/miller_rabin.hpp>

#include "ubv/bigint.hpp"
#include "ubv/common.hpp"

namespace ubv {

namespace detail {

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((u128)a * b % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// One strong-pseudoprime round; n odd, n > 2, n-1 = d * 2^s.
inline bool mr_round(u64 n, u64 a, u64 d, int s) {
  a %= n;
  if (a == 0) return true;
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace detail

inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    if (!detail::mr_round(n, a, d, s)) return false;
  return true;
}

// Probabilistic test for big integers; deterministic generator seed (derived
// from the input) so results are reproducible run to run.
inline bool is_probable_prime(const bigint& n, unsigned rounds = 64) {
  if (n < 2) return false;
  if (n <= std::numeric_limits<u64>::max()) return is_prime_u64(static_cast<u64>(n));
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ static_cast<u64>(n % 0xffffffffffffffc5ull));
  return boost::multiprecision::miller_rabin_test(n, rounds, rng);
}

}  // namespace ubv
