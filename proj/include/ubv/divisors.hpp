#pragma once
// The five multiplicative functions on factored input, in two tiers:
//   - exact cpp_int evaluation on a validated Factorization (any size), and
//   - overflow-checked u64 fast paths on a FactorView (sieve hot loops).
// Plus definition-level brute-force oracles used to validate the closed forms.
//
//   sigma(p^a)      = 1 + p + ... + p^a          (all divisors)
//   sigma_star(p^a) = 1 + p^a                    (unitary divisors)
//   sigma_exp(p^a)  = sum_{b|a} p^b              (exponential divisors)
//   d(p^a)          = a + 1
//   d_exp(p^a)      = d(a)

#include <numeric>
#include <optional>
#include <vector>

#include "ubv/bigint.hpp"
#include "ubv/common.hpp"
#include "ubv/factorization.hpp"

namespace ubv {

enum class DivisorFunctionKind { SIGMA, SIGMA_STAR, SIGMA_EXP, D, D_EXP };

namespace detail {

// Divisors of a small exponent (a <= a few hundred in practice).
inline std::vector<u32> divisors_of(u32 a) {
  std::vector<u32> out;
  for (u32 b = 1; b * b <= a; ++b) {
    if (a % b) continue;
    out.push_back(b);
    if (b != a / b) out.push_back(a / b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// ---- exact evaluation on validated factorizations ----

inline bigint sigma(const Factorization& f) {
  bigint r = 1;
  for (const auto& [p, e] : f.pairs()) {
    bigint term = 1, pp = 1;
    for (u32 i = 0; i < e; ++i) {
      pp *= p;
      term += pp;
    }
    r *= term;
  }
  return r;
}

inline bigint sigma_star(const Factorization& f) {
  bigint r = 1;
  for (const auto& [p, e] : f.pairs()) r *= boost::multiprecision::pow(p, e) + 1;
  return r;
}

inline bigint sigma_exp(const Factorization& f) {
  bigint r = 1;
  for (const auto& [p, e] : f.pairs()) {
    bigint term = 0;
    for (u32 b : detail::divisors_of(e)) term += boost::multiprecision::pow(p, b);
    r *= term;
  }
  return r;
}

inline bigint d(const Factorization& f) {
  bigint r = 1;
  for (const auto& [p, e] : f.pairs()) r *= (e + 1);
  return r;
}

inline bigint d_exp(const Factorization& f) {
  bigint r = 1;
  for (const auto& [p, e] : f.pairs()) r *= detail::divisors_of(e).size();
  return r;
}

inline bigint evaluate(DivisorFunctionKind kind, const Factorization& f) {
  switch (kind) {
    case DivisorFunctionKind::SIGMA: return sigma(f);
    case DivisorFunctionKind::SIGMA_STAR: return sigma_star(f);
    case DivisorFunctionKind::SIGMA_EXP: return sigma_exp(f);
    case DivisorFunctionKind::D: return d(f);
    case DivisorFunctionKind::D_EXP: return d_exp(f);
  }
  throw std::logic_error("evaluate: bad kind");
}

// ---- u64 fast paths (nullopt on overflow; callers fall back to cpp_int) ----

inline std::optional<u64> sigma_u64(FactorView v) {
  u64 r = 1;
  for (const auto& [p, e] : v) {
    u64 term = 1, pp = 1;
    for (u32 i = 0; i < e; ++i) {
      if (!checked_mul(pp, p, pp)) return std::nullopt;
      if (!checked_add(term, pp, term)) return std::nullopt;
    }
    if (!checked_mul(r, term, r)) return std::nullopt;
  }
  return r;
}

inline std::optional<u64> sigma_star_u64(FactorView v) {
  u64 r = 1;
  for (const auto& [p, e] : v) {
    u64 pp = 1;
    for (u32 i = 0; i < e; ++i)
      if (!checked_mul(pp, p, pp)) return std::nullopt;
    if (!checked_add(pp, 1, pp)) return std::nullopt;
    if (!checked_mul(r, pp, r)) return std::nullopt;
  }
  return r;
}

inline std::optional<u64> sigma_exp_u64(FactorView v) {
  u64 r = 1;
  for (const auto& [p, e] : v) {
    u64 term = 0;
    for (u32 b = 1; b <= e; ++b) {
      if (e % b) continue;
      u64 pp = 1;
      for (u32 i = 0; i < b; ++i)
        if (!checked_mul(pp, p, pp)) return std::nullopt;
      if (!checked_add(term, pp, term)) return std::nullopt;
    }
    if (!checked_mul(r, term, r)) return std::nullopt;
  }
  return r;
}

inline std::optional<u64> d_u64(FactorView v) {
  u64 r = 1;
  for (const auto& [p, e] : v)
    if (!checked_mul(r, e + 1ull, r)) return std::nullopt;
  return r;
}

inline std::optional<u64> d_exp_u64(FactorView v) {
  u64 r = 1;
  for (const auto& [p, e] : v) {
    u64 cnt = 0;
    for (u32 b = 1; b <= e; ++b)
      if (e % b == 0) ++cnt;
    if (!checked_mul(r, cnt, r)) return std::nullopt;
  }
  return r;
}

// ---- definition-level oracle (no multiplicative shortcut) ----
//
// SIGMA / SIGMA_STAR / D enumerate divisor pairs (d, n/d) directly;
// SIGMA_EXP / D_EXP enumerate exponential-divisor tuples from an internal
// trial-division factorization that shares no code with factorize().

inline bigint brute_force_divisor_oracle(u64 n, DivisorFunctionKind kind) {
  if (n == 0) throw std::domain_error("brute_force_divisor_oracle: n = 0");
  switch (kind) {
    case DivisorFunctionKind::SIGMA:
    case DivisorFunctionKind::SIGMA_STAR:
    case DivisorFunctionKind::D: {
      bigint sum = 0, cnt = 0;
      auto take = [&](u64 dv) {
        if (kind == DivisorFunctionKind::SIGMA_STAR && std::gcd(dv, n / dv) != 1) return;
        sum += dv;
        cnt += 1;
      };
      for (u64 a = 1; a * a <= n; ++a) {
        if (n % a) continue;
        take(a);
        if (a != n / a) take(n / a);
      }
      return kind == DivisorFunctionKind::D ? cnt : sum;
    }
    case DivisorFunctionKind::SIGMA_EXP:
    case DivisorFunctionKind::D_EXP: {
      // independent trial-division factorization
      std::vector<std::pair<u64, u32>> pf;
      u64 m = n;
      for (u64 p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        u32 e = 0;
        while (m % p == 0) m /= p, ++e;
        pf.emplace_back(p, e);
      }
      if (m > 1) pf.emplace_back(m, 1);
      // walk every tuple (b_1 | a_1, ..., b_r | a_r)
      bigint sum = 0, cnt = 0;
      std::vector<std::vector<u32>> choices;
      for (auto& [p, e] : pf) choices.push_back(detail::divisors_of(e));
      std::vector<std::size_t> idx(pf.size(), 0);
      while (true) {
        bigint dv = 1;
        for (std::size_t i = 0; i < pf.size(); ++i)
          dv *= boost::multiprecision::pow(bigint(pf[i].first), choices[i][idx[i]]);
        sum += dv;
        cnt += 1;
        std::size_t i = 0;
        for (; i < pf.size(); ++i) {
          if (++idx[i] < choices[i].size()) break;
          idx[i] = 0;
        }
        if (i == pf.size()) break;
      }
      return kind == DivisorFunctionKind::SIGMA_EXP ? sum : cnt;
    }
  }
  throw std::logic_error("brute_force_divisor_oracle: bad kind");
}

}  // namespace ubv
