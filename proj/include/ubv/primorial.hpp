#pragma once
// The primorial reduction: for N_k <= n < N_{k+1},
//   sigma*(n)/n <= sigma*(N_k)/N_k = prod_{i<=k} (1 + 1/p_i),
// so the theorem reduces to the ratio
//   R(k) = exp(sum_{i<=k} log(1+1/p_i)) / log(theta(p_k)),
// where theta(p_k) = log N_k.  This header verifies R(k) <= c over k ranges
// in log space with interval tracking (never forming N_k), cross-checks small
// k exactly in big-integer/rational arithmetic, certifies the k > 10^6 tail
// from the analytic bounds, and supports deterministic checkpoint splits.

#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>

#include "ubv/analytic.hpp"
#include "ubv/divisors.hpp"
#include "ubv/report.hpp"
#include "ubv/wide_interval.hpp"

namespace ubv {

inline constexpr u64 kMillionthPrime = 15'485'863;

struct PrimorialState {
  u64 k = 0;    // primes consumed so far (1-based count)
  u64 p_k = 0;  // last prime consumed
  DirectedValue sum_log1p;  // Sum log(1 + 1/p_i), i <= k
  DirectedValue theta;      // Sum log p_i = log N_k

  void advance(u64 next_prime) {
    DirectedValue p = DirectedValue::exact(static_cast<double>(next_prime));
    sum_log1p = sum_log1p + log1p(1.0 / p);
    theta = theta + log(p);
    p_k = next_prime;
    ++k;
  }
};

namespace detail {

// Interval ratio from the running state; requires theta > 1 (k >= 2).
inline DirectedValue state_ratio(const PrimorialState& s) {
  return exp(s.sum_log1p) / log(s.theta);
}

// Exact small-k path: sigma*(N_k)/N_k as a big rational over a wide bracket
// of log log N_k; returns a DirectedValue enclosure.
inline DirectedValue exact_primorial_ratio(u64 k, const PrimeTable& table) {
  bigint nk = 1, sstar = 1;
  for (u64 i = 1; i <= k; ++i) {
    bigint p(table.prime_at(i));
    nk *= p;
    sstar *= p + 1;
  }
  WideValue r = ratio_wide(sstar, nk) / loglog_wide(nk);
  return r.to_directed();
}

inline DirectedValue intersect(const DirectedValue& a, const DirectedValue& b) {
  DirectedValue r(std::max(a.lo, b.lo), std::min(a.hi, b.hi));
  return r;  // constructor rejects empty intersections (lo > hi)
}

// Wide-precision from-scratch re-summation, the INDETERMINATE escape hatch.
inline DirectedValue wide_primorial_ratio(u64 k, const PrimeTable& table) {
  WideValue sum = WideValue::exact(0), th = WideValue::exact(0);
  for (u64 i = 1; i <= k; ++i) {
    WideValue p = WideValue::exact(float50(table.prime_at(i)));
    WideValue one = WideValue::exact(1);
    sum = sum + log(one + one / p);
    th = th + log(p);
  }
  return (exp(sum) / log(th)).to_directed();
}

}  // namespace detail

inline constexpr u64 kExactPrimorialLimit = 20;  // big-rational cross-check depth

// Build the RatioRecord for one k from an already-advanced state.
inline RatioRecord primorial_record(const PrimorialState& s, const Threshold& threshold,
                                    const PrimeTable& table) {
  if (s.k < 2) throw std::domain_error("primorial ratio undefined for k < 2 (log log N_1 < 0)");
  RatioRecord rec;
  rec.subject_kind = SubjectKind::primorial_index;
  rec.subject = s.k;
  rec.ratio = detail::state_ratio(s);
  rec.exact = false;
  if (s.k <= kExactPrimorialLimit) {
    rec.ratio = detail::intersect(rec.ratio, detail::exact_primorial_ratio(s.k, table));
    rec.exact = true;
  }
  rec.verdict = classify(rec.ratio, threshold);
  if (rec.verdict == Verdict::INDETERMINATE) {
    rec.ratio = detail::intersect(rec.ratio, detail::wide_primorial_ratio(s.k, table));
    rec.verdict = classify(rec.ratio, threshold);
  }
  return rec;
}

// R(k) for a single k (advances a fresh state; use verify_primorial_range to
// stream many k).
inline RatioRecord primorial_ratio(u64 k, const PrimeTable& table,
                                   const Threshold& threshold = parse_threshold("1.3007")) {
  if (k < 2) throw std::domain_error("primorial_ratio: k must be >= 2");
  if (k > table.count()) throw std::out_of_range("primorial_ratio: prime table too small");
  PrimorialState s;
  for (u64 i = 1; i <= k; ++i) s.advance(table.prime_at(i));
  return primorial_record(s, threshold, table);
}

// ---- checkpoints: plain text `k p_k sum_lo sum_hi theta_lo theta_hi` ----

inline void append_checkpoint(const std::string& path, const PrimorialState& s) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open checkpoint file: " + path);
  out << s.k << ' ' << s.p_k << ' ' << detail::shortest(s.sum_log1p.lo) << ' '
      << detail::shortest(s.sum_log1p.hi) << ' ' << detail::shortest(s.theta.lo) << ' '
      << detail::shortest(s.theta.hi) << '\n';
}

inline std::vector<PrimorialState> load_checkpoints(const std::string& path) {
  std::vector<PrimorialState> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string f[6];
    for (auto& s : f)
      if (!(ls >> s)) throw std::invalid_argument("checkpoint: short line: " + line);
    PrimorialState s;
    s.k = std::stoull(f[0]);
    s.p_k = std::stoull(f[1]);
    s.sum_log1p = DirectedValue(detail::parse_double(f[2]), detail::parse_double(f[3]));
    s.theta = DirectedValue(detail::parse_double(f[4]), detail::parse_double(f[5]));
    out.push_back(s);
  }
  return out;
}

// ---- range verification ----

struct VerifyOptions {
  std::string checkpoint_path;     // empty: checkpointing disabled
  u64 checkpoint_every = 100'000;  // steps between checkpoint lines
};

// Streams k = k_lo..k_hi (inclusive), reporting every k whose verdict is not
// BELOW.  INDETERMINATE verdicts that survive the wide re-check stay in the
// report (never dropped); the caller treats them as verification failures.
inline ScanReport verify_primorial_range(u64 k_lo, u64 k_hi, const Threshold& threshold,
                                         const PrimeTable& table,
                                         const VerifyOptions& opts = {}) {
  if (k_lo < 2 || k_lo > k_hi) throw std::domain_error("verify_primorial_range: need 2 <= k_lo <= k_hi");
  if (k_hi > table.count())
    throw std::out_of_range("verify_primorial_range: prime table covers only " +
                            std::to_string(table.count()) + " primes, need " + std::to_string(k_hi));
  auto t0 = std::chrono::steady_clock::now();
  ScanReport report;
  report.kind = "primorial";
  report.lo = k_lo;
  report.hi = k_hi + 1;
  report.threshold = threshold;

  PrimorialState s;
  if (!opts.checkpoint_path.empty()) {
    for (const auto& cs : load_checkpoints(opts.checkpoint_path))
      if (cs.k < k_lo && cs.k > s.k) s = cs;  // best state strictly before the range
  }
  for (u64 k = s.k + 1; k <= k_hi; ++k) {
    s.advance(table.prime_at(k));
    if (!opts.checkpoint_path.empty() && k % opts.checkpoint_every == 0)
      append_checkpoint(opts.checkpoint_path, s);
    if (k < k_lo) continue;
    RatioRecord rec = primorial_record(s, threshold, table);
    ++report.counts.total;
    if (rec.verdict == Verdict::BELOW)
      ++report.counts.satisfying;
    else
      report.exceptions.push_back(rec);
    if (!report.max_ratio || rec.ratio.hi > report.max_ratio->ratio.hi) report.max_ratio = rec;
  }
  report.runtime_ms = static_cast<u64>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                           std::chrono::steady_clock::now() - t0)
                                           .count());
  return report;
}

// ---- the k > 10^6 tail, certified without iteration ----

struct TailCertificate {
  bool ok = false;
  Threshold threshold;
  u64 pk_index = 1'000'000;
  u64 pk_value = kMillionthPrime;
  bool index_check_ok = false;     // table confirms p_{10^6} = 15,485,863
  bool cutoffs_ok = false;         // both Dusart cutoffs lie below p_{10^6}
  DirectedValue ratio_at_pk;       // ratio_bound(p_{10^6})
  Verdict verdict = Verdict::INDETERMINATE;
  bool monotone_grid_ok = false;   // ratio_bound non-increasing on the grid
  std::vector<std::pair<double, DirectedValue>> grid;  // (x, ratio_bound(x))
  std::string failure_reason;
};

// Certifies R(k) <= threshold for ALL k >= 10^6: every such k has
// p_k >= 15,485,863, both analytic bounds are valid there, and
// ratio_bound(x) = A1(x)/A2(x) >= R(k) at x = p_k decreases in x.
inline TailCertificate asymptotic_tail_certificate(
    const Threshold& threshold, const PrimeTable& table,
    A1Form form = A1Form::combined_log2, const BoundTable& bt = bound_table()) {
  TailCertificate cert;
  cert.threshold = threshold;

  cert.index_check_ok =
      table.limit() >= kMillionthPrime && table.prime_at(1'000'000) == kMillionthPrime;
  if (!cert.index_check_ok) {
    cert.failure_reason = "prime table does not confirm the 1,000,000th prime";
    return cert;
  }
  cert.cutoffs_ok = bt.mertens_cutoff <= cert.pk_value && bt.theta_cutoff <= cert.pk_value;
  if (!cert.cutoffs_ok) {
    cert.failure_reason = "analytic validity cutoffs exceed p_1000000";
    return cert;
  }

  cert.ratio_at_pk = ratio_bound(static_cast<double>(cert.pk_value), form, bt);
  cert.verdict = classify(cert.ratio_at_pk, threshold);
  if (cert.verdict == Verdict::INDETERMINATE) {
    cert.failure_reason = "ratio bound interval straddles the threshold";
    return cert;
  }
  if (cert.verdict == Verdict::ABOVE) {
    cert.failure_reason = "ratio bound at p_1000000 exceeds the threshold (floor is e^B = 1.29887...)";
    return cert;
  }

  // grid check: geometric ladder up to the design ceiling, hi non-increasing
  cert.monotone_grid_ok = true;
  double x = static_cast<double>(cert.pk_value);
  double prev_hi = cert.ratio_at_pk.hi;
  cert.grid.emplace_back(x, cert.ratio_at_pk);
  constexpr int kGridPoints = 32;
  double factor = std::pow(1e12 / static_cast<double>(kMillionthPrime), 1.0 / (kGridPoints - 1));
  for (int i = 1; i < kGridPoints; ++i) {
    x *= factor;
    DirectedValue rb = ratio_bound(x, form, bt);
    cert.grid.emplace_back(x, rb);
    if (rb.hi > prev_hi) cert.monotone_grid_ok = false;
    prev_hi = rb.hi;
  }
  if (!cert.monotone_grid_ok) {
    cert.failure_reason = "ratio bound failed to decrease along the sample grid";
    return cert;
  }
  cert.ok = true;
  return cert;
}

// ---- the reduction step itself ----

// For N_k <= n < N_{k+1} (k <= 8 in the desk range): confirms
// sigma*(n)/n <= sigma*(N_k)/N_k by exact cross-multiplication.
inline bool reduction_step_check(u64 n, const PrimeTable& table) {
  if (n < 6 || n >= 223'092'870)  // [N_2, N_9)
    throw std::domain_error("reduction_step_check: n outside [6, N_9)");
  bigint nk = 1, sstar_nk = 1;
  u64 k = 0;
  for (u64 i = 1;; ++i) {
    bigint p(table.prime_at(i));
    if (nk * p > n) break;
    nk *= p;
    sstar_nk *= p + 1;
    k = i;
  }
  (void)k;
  bigint sstar_n = sigma_star(factorize(n));
  return sstar_n * nk <= sstar_nk * n;
}

}  // namespace ubv
