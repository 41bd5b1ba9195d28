#pragma once
// Segmented factoring sieve: visits every n in [lo, hi) in ascending order
// with its complete factorization, without dividing per multiple.
//
// Per segment: one counting pass over multiples of the sieve primes sizes an
// exact-fit arena; the fill pass appends {p, 1} per prime hit and bumps the
// exponent in place for higher prime powers; a running product val[n] then
// exposes the single prime cofactor > sqrt(hi-1) (if any) with one division.
// Cost is ~sum_{p <= sqrt(hi)} seg/p stride work, ~40 bytes/n transient.

#include <algorithm>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "ubv/common.hpp"
#include "ubv/factorization.hpp"
#include "ubv/prime_table.hpp"

namespace ubv {

struct SieveConfig {
  u64 segment_size = u64(1) << 22;
  u64 memory_budget = u64(3) << 30;  // bytes across all per-segment buffers
};

inline constexpr u64 kScanCeiling = u64(1'000'000'000'000);  // design ceiling 10^12

// Near-equal contiguous chunks [lo, hi) for data-parallel scans.
inline std::vector<std::pair<u64, u64>> partition_range(u64 lo, u64 hi, unsigned parts) {
  if (lo >= hi) throw std::domain_error("partition_range: empty range");
  if (parts == 0) throw std::domain_error("partition_range: zero parts");
  u64 span = hi - lo;
  if (parts > span) parts = static_cast<unsigned>(span);
  std::vector<std::pair<u64, u64>> out;
  out.reserve(parts);
  u64 base = span / parts, extra = span % parts, cur = lo;
  for (unsigned i = 0; i < parts; ++i) {
    u64 len = base + (i < extra ? 1 : 0);
    out.emplace_back(cur, cur + len);
    cur += len;
  }
  return out;
}

template <class Visitor>
void enumerate_factored(u64 lo, u64 hi, Visitor&& visit, const SieveConfig& cfg = {}) {
  if (lo < 1 || lo >= hi) throw std::domain_error("enumerate_factored: need 1 <= lo < hi");
  if (hi - 1 > kScanCeiling)
    throw std::domain_error("enumerate_factored: range beyond 10^12 design ceiling");
  if (cfg.segment_size < 64) throw std::domain_error("enumerate_factored: segment_size too small");

  u64 root = isqrt(hi - 1);
  std::vector<u64> sieve_primes;
  if (root >= 2) sieve_primes = primes_up_to(root, cfg.memory_budget).primes();

  std::vector<u32> cnt;
  std::vector<u32> start, fill;
  std::vector<u64> val;
  std::vector<PrimePower> arena;

  for (u64 a = lo; a < hi; a += cfg.segment_size) {
    u64 b = std::min(hi, a + cfg.segment_size);
    std::size_t len = static_cast<std::size_t>(b - a);

    cnt.assign(len, 0);
    for (u64 p : sieve_primes) {
      for (u64 m = ((a + p - 1) / p) * p; m < b; m += p) ++cnt[m - a];
    }

    u64 total = len;  // one cofactor slot per n
    for (std::size_t i = 0; i < len; ++i) total += cnt[i];

    u64 bytes = len * (4 + 4 + 4 + 8) + total * sizeof(PrimePower);
    if (bytes > cfg.memory_budget || total > std::numeric_limits<u32>::max())
      throw resource_error("enumerate_factored: segment needs " + std::to_string(bytes) +
                           " bytes, over budget; lower segment_size");

    start.resize(len + 1);
    u64 acc = 0;
    for (std::size_t i = 0; i < len; ++i) {
      start[i] = static_cast<u32>(acc);
      acc += cnt[i] + 1;
    }
    start[len] = static_cast<u32>(acc);
    arena.resize(total);
    fill.assign(start.begin(), start.end() - 1);
    val.assign(len, 1);

    for (u64 p : sieve_primes) {
      for (u64 m = ((a + p - 1) / p) * p; m < b; m += p) {
        std::size_t i = m - a;
        arena[fill[i]++] = {p, 1};
        val[i] *= p;
      }
      if (p > (b - 1) / p) continue;  // p^2 beyond segment
      for (u64 q = p * p;; q *= p) {
        for (u64 m = ((a + q - 1) / q) * q; m < b; m += q) {
          std::size_t i = m - a;
          arena[fill[i] - 1].e += 1;  // p-entry was appended last for this n
          val[i] *= p;
        }
        if (q > (b - 1) / p) break;
      }
    }

    for (std::size_t i = 0; i < len; ++i) {
      u64 n = a + i;
      if (val[i] != n) arena[fill[i]++] = {n / val[i], 1};
      visit(n, FactorView(arena.data() + start[i], fill[i] - start[i]));
    }
  }
}

}  // namespace ubv
