#pragma once
// PrimeTable: all primes <= limit from a bit-packed Eratosthenes sieve, with
// 1-based indexed access (prime_at(1) = 2), prime counting, and membership.

#include <algorithm>
#include <vector>

#include "ubv/common.hpp"

namespace ubv {

class PrimeTable {
 public:
  PrimeTable(u64 limit, std::vector<u64> primes) : limit_(limit), primes_(std::move(primes)) {}

  u64 limit() const { return limit_; }
  const std::vector<u64>& primes() const { return primes_; }
  u64 count() const { return primes_.size(); }

  // p_k with 1-based k: prime_at(1) = 2.
  u64 prime_at(u64 k) const {
    if (k == 0 || k > primes_.size())
      throw std::out_of_range("PrimeTable::prime_at: index " + std::to_string(k) +
                              " outside [1, " + std::to_string(primes_.size()) + "]");
    return primes_[k - 1];
  }

  // pi(x): number of primes <= x.
  u64 pi(u64 x) const {
    if (x > limit_) throw std::out_of_range("PrimeTable::pi beyond table limit");
    return std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin();
  }

  bool contains(u64 p) const {
    if (p > limit_) throw std::out_of_range("PrimeTable::contains beyond table limit");
    return std::binary_search(primes_.begin(), primes_.end(), p);
  }

 private:
  u64 limit_;
  std::vector<u64> primes_;
};

// Sieve of Eratosthenes over a bit array (1 bit per integer, ~limit/8 bytes).
// memory_budget caps the bit array plus the output vector.
inline PrimeTable primes_up_to(u64 limit, u64 memory_budget = u64(1) << 31) {
  if (limit < 2) throw std::domain_error("primes_up_to: limit must be >= 2");
  u64 words = limit / 64 + 1;
  // rough prime-count upper estimate for the output vector: limit/log(limit) * 1.3
  double est = 1.3 * static_cast<double>(limit) / std::log(static_cast<double>(limit < 3 ? 3 : limit));
  if (words * 8 + static_cast<u64>(est) * 8 > memory_budget)
    throw resource_error("primes_up_to: limit " + std::to_string(limit) +
                         " exceeds memory budget");
  std::vector<u64> composite(words, 0);
  auto set = [&](u64 i) { composite[i >> 6] |= u64(1) << (i & 63); };
  auto get = [&](u64 i) { return (composite[i >> 6] >> (i & 63)) & 1; };
  for (u64 i = 2; i * i <= limit; ++i) {
    if (get(i)) continue;
    for (u64 j = i * i; j <= limit; j += i) set(j);
  }
  std::vector<u64> primes;
  primes.reserve(static_cast<std::size_t>(est));
  for (u64 i = 2; i <= limit; ++i)
    if (!get(i)) primes.push_back(i);
  return PrimeTable(limit, std::move(primes));
}

}  // namespace ubv
