#pragma once
// Factorization: an integer as a validated, sorted list of (prime, exponent)
// pairs with its exact value, the universal input to the divisor functions.
// Also: factorize() for machine-sized n and a "p^a * q^b" text format.

#include <algorithm>
#include <cctype>
#include <limits>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ubv/bigint.hpp"
#include "ubv/common.hpp"
#include "ubv/primality.hpp"

namespace ubv {

// Machine-sized prime power, the hot-path currency of segmented scans.
struct PrimePower {
  u64 p;
  u32 e;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using FactorView = std::span<const PrimePower>;

class Factorization {
 public:
  using pair_list = std::vector<std::pair<bigint, u32>>;

  Factorization() : value_(1) {}  // empty product: n = 1

  explicit Factorization(pair_list pairs) : pairs_(std::move(pairs)), value_(1) {
    const bigint* prev = nullptr;
    for (const auto& [p, e] : pairs_) {
      if (prev && !(*prev < p))
        throw std::invalid_argument("Factorization: primes not strictly increasing");
      if (e == 0) throw std::invalid_argument("Factorization: zero exponent");
      if (!is_probable_prime(p))
        throw std::invalid_argument("Factorization: listed factor is not prime");
      bigint pp = boost::multiprecision::pow(p, e);
      value_ *= pp;
      prev = &p;
    }
  }

  // Trusted fast path for sieve output: factors already sorted, prime, exact.
  static Factorization from_view(FactorView v) {
    Factorization f;
    f.pairs_.reserve(v.size());
    for (const auto& pp : v) {
      f.pairs_.emplace_back(bigint(pp.p), pp.e);
      f.value_ *= boost::multiprecision::pow(bigint(pp.p), pp.e);
    }
    return f;
  }

  const pair_list& pairs() const { return pairs_; }
  const bigint& value() const { return value_; }
  std::size_t distinct_primes() const { return pairs_.size(); }

  bool squarefree() const {
    return std::all_of(pairs_.begin(), pairs_.end(), [](const auto& pe) { return pe.second == 1; });
  }

  // "2^2 * 3" style; ^1 omitted.
  std::string to_string() const {
    if (pairs_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : pairs_) {
      if (!first) os << " * ";
      os << p;
      if (e > 1) os << '^' << e;
      first = false;
    }
    return os.str();
  }

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.pairs_ == b.pairs_;
  }

 private:
  pair_list pairs_;
  bigint value_;
};

namespace detail {

// Primes up to 2^21 by plain sieve, built once; enough to trial-divide any
// n <= 2^42 completely and to peel every n <= 2^64 down to a prime cofactor.
inline const std::vector<u32>& trial_primes() {
  static const std::vector<u32> primes = [] {
    constexpr u32 limit = 1u << 21;
    std::vector<bool> comp(limit + 1, false);
    std::vector<u32> out;
    for (u32 i = 2; i <= limit; ++i) {
      if (comp[i]) continue;
      out.push_back(i);
      for (u64 j = static_cast<u64>(i) * i; j <= limit; j += i) comp[j] = true;
    }
    return out;
  }();
  return primes;
}

}  // namespace detail

// Canonical factorization of a machine-sized integer.  Trial division by all
// primes <= 2^21, then the remaining cofactor is either prime (kept) or a
// semiprime-or-worse beyond 2^42 (rejected: out of design range).
inline Factorization factorize(u64 n) {
  if (n == 0) throw std::domain_error("factorize: n = 0 has no factorization");
  Factorization::pair_list pairs;
  u64 rem = n;
  for (u32 p : detail::trial_primes()) {
    if (static_cast<u64>(p) * p > rem) break;
    if (rem % p) continue;
    u32 e = 0;
    while (rem % p == 0) rem /= p, ++e;
    pairs.emplace_back(bigint(p), e);
  }
  if (rem > 1) {
    if (!is_prime_u64(rem))
      throw std::domain_error("factorize: composite cofactor " + std::to_string(rem) +
                              " has no prime factor <= 2^21 (n beyond design range)");
    pairs.emplace_back(bigint(rem), 1);
  }
  return Factorization(std::move(pairs));
}

// Parse "2^49 * 4363953127297" / "12" style text into a validated
// Factorization; a bare integer (no '^' or '*') is factorized.
inline Factorization parse_factorization(const std::string& text) {
  if (text.find('^') == std::string::npos && text.find('*') == std::string::npos) {
    std::size_t pos = 0;
    unsigned long long n = 0;
    try {
      n = std::stoull(text, &pos);
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("parse_factorization: " + text +
                                  " exceeds 64 bits; supply it in factored p^a form");
    }
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) throw std::invalid_argument("parse_factorization: bad integer: " + text);
    return factorize(n);
  }
  Factorization::pair_list pairs;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() -> bigint {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw std::invalid_argument("parse_factorization: digit expected in: " + text);
    return bigint(text.substr(start, i - start));
  };
  while (true) {
    bigint p = read_int();
    u32 e = 1;
    skip_ws();
    if (i < text.size() && text[i] == '^') {
      ++i;
      bigint be = read_int();
      if (be < 1 || be > std::numeric_limits<u32>::max())
        throw std::invalid_argument("parse_factorization: exponent out of range");
      e = static_cast<u32>(be);
    }
    pairs.emplace_back(std::move(p), e);
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '*') throw std::invalid_argument("parse_factorization: '*' expected in: " + text);
    ++i;
  }
  return Factorization(std::move(pairs));
}

}  // namespace ubv
