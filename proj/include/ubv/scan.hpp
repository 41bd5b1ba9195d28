#pragma once
// Exhaustive range scans.  All share one engine: a segmented factoring sieve
// feeds exact u64 function values into a two-phase comparator —
//   phase 1: double-precision filter with a 1e-9 relative safety band
//            (plus a cheap block-constant log log lower bound to skip the
//            overwhelmingly-satisfying bulk without a per-n log call);
//   phase 2: 50-digit interval log log + exact integer cross-multiplication
//            against the threshold as an exact rational.
// Every reported exception carries a rigorous ratio enclosure; anything the
// wide pass cannot separate stays in the report as INDETERMINATE (a
// verification failure), never silently dropped.

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <thread>

#include "ubv/constants.hpp"
#include "ubv/divisors.hpp"
#include "ubv/report.hpp"
#include "ubv/segment_sieve.hpp"
#include "ubv/wide_interval.hpp"

namespace ubv {

struct ScanOptions {
  unsigned threads = 1;
  u64 segment_size = u64(1) << 22;
  u64 memory_budget = u64(3) << 30;

  SieveConfig sieve() const { return {segment_size, memory_budget}; }
};

namespace detail {

inline u64 elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return static_cast<u64>(std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count());
}

// Run worker(chunk_lo, chunk_hi) over a deterministic partition, collecting
// results in range order.  threads == 1 stays on the calling thread.
template <class Partial, class Worker>
std::vector<Partial> run_partitioned(u64 lo, u64 hi, unsigned threads, Worker worker) {
  auto chunks = partition_range(lo, hi, threads == 0 ? 1 : threads);
  std::vector<Partial> results(chunks.size());
  if (chunks.size() == 1) {
    results[0] = worker(chunks[0].first, chunks[0].second);
    return results;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(chunks.size());
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    pool.emplace_back([&, i] {
      try {
        results[i] = worker(chunks[i].first, chunks[i].second);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

// Exact wide-interval comparison: is f > (num/den) * scale * loglog(n)?
// Returns a fully-classified record (ABOVE = exception, BELOW = satisfies);
// INDETERMINATE only if 50 digits cannot separate the sides.
inline RatioRecord wide_compare(u64 n, u64 f, const bigint& num, const bigint& den,
                                u64 scale) {
  WideValue ll = loglog_wide(bigint(n));
  WideValue denom = WideValue::from_integer(bigint(scale)) * ll;
  WideValue ratio = WideValue::from_integer(bigint(f)) / denom;
  RatioRecord rec;
  rec.subject_kind = SubjectKind::integer;
  rec.subject = n;
  rec.ratio = ratio.to_directed();
  rec.exact = true;
  // verdict by cross-multiplication: f*den vs num*scale*ll
  WideValue lhs = WideValue::from_integer(bigint(f) * den);
  WideValue rhs = WideValue::from_integer(num * scale) * ll;
  if (lhs.lo > rhs.hi)
    rec.verdict = Verdict::ABOVE;
  else if (lhs.hi <= rhs.lo)
    rec.verdict = Verdict::BELOW;
  else
    rec.verdict = Verdict::INDETERMINATE;
  return rec;
}

struct ThresholdScanPartial {
  std::vector<RatioRecord> exceptions;
  std::vector<ExcludedN> excluded;
  std::vector<u64> pointwise_violations;
  ScanCounts counts;
  bool have_best = false;
  u64 best_n = 0, best_f = 0, best_scale = 1;
  double best_r = -1.0;
};

// One partition chunk of a threshold scan: exception iff
//   value(n, view) > (num/den) * scale(n, view) * log log n.
// For the plain scans scale == n; for the Derbal shape scale == sigma*(n).
template <class ValueFn, class ScaleFn, class PerN>
ThresholdScanPartial threshold_chunk(u64 lo, u64 hi, const Threshold& thr, ValueFn value,
                                     ScaleFn scale, PerN per_n, const SieveConfig& sieve_cfg) {
  ThresholdScanPartial part;
  const double thr_apx = thr.approx();
  constexpr double kBand = 1e-9;  // relative phase-1 safety margin
  constexpr u64 kBlock = u64(1) << 16;

  double block_ll_lo = 0.0;  // rigorous lower bound of loglog over current block
  u64 block_end = 0;

  enumerate_factored(
      lo, hi,
      [&](u64 n, FactorView v) {
        per_n(n, v, part);
        if (n < 3) {
          part.excluded.push_back(
              {n, n == 1 ? "log log 1 is undefined (log 1 = 0)"
                         : "log log 2 is negative; ratio undefined in sign"});
          return;
        }
        ++part.counts.total;
        u64 f = value(n, v);
        u64 sc = scale(n, v);
        if (n >= block_end) {
          u64 bs = n & ~(kBlock - 1);
          if (bs < 3) bs = 3;
          block_ll_lo = loglog_point(static_cast<double>(bs)).lo;
          block_end = (n & ~(kBlock - 1)) + kBlock;
        }
        double fs = static_cast<double>(f);
        double rhs_block = thr_apx * static_cast<double>(sc) * block_ll_lo;
        // max-ratio candidate? f/(sc*block_ll_lo) upper-bounds the true ratio
        bool max_candidate = part.have_best ? fs > part.best_r * static_cast<double>(sc) * block_ll_lo
                                            : true;
        if (fs <= rhs_block * (1.0 - kBand) && !max_candidate) {
          ++part.counts.satisfying;
          return;
        }
        double ll = std::log(std::log(static_cast<double>(n)));
        double r = fs / (static_cast<double>(sc) * ll);
        if (max_candidate && (!part.have_best || r > part.best_r)) {
          part.have_best = true;
          part.best_n = n;
          part.best_f = f;
          part.best_scale = sc;
          part.best_r = r;
        }
        double rhs = thr_apx * static_cast<double>(sc) * ll;
        if (fs <= rhs * (1.0 - kBand)) {  // clearly satisfying
          ++part.counts.satisfying;
          return;
        }
        RatioRecord rec = wide_compare(n, f, thr.num, thr.den, sc);
        if (rec.verdict == Verdict::BELOW)
          ++part.counts.satisfying;
        else
          part.exceptions.push_back(rec);
      },
      sieve_cfg);
  return part;
}

template <class ValueFn, class ScaleFn, class PerN>
ScanReport threshold_scan(std::string kind, u64 lo, u64 hi, const Threshold& thr,
                          ValueFn value, ScaleFn scale, PerN per_n, const ScanOptions& opts) {
  if (lo < 1 || lo >= hi) throw std::domain_error("scan: need 1 <= lo < hi");
  auto t0 = std::chrono::steady_clock::now();
  auto parts = run_partitioned<ThresholdScanPartial>(
      lo, hi, opts.threads, [&](u64 clo, u64 chi) {
        return threshold_chunk(clo, chi, thr, value, scale, per_n, opts.sieve());
      });
  ScanReport rep;
  rep.kind = std::move(kind);
  rep.lo = lo;
  rep.hi = hi;
  rep.threshold = thr;
  bool have_best = false;
  u64 best_n = 0;
  double best_r = -1.0;
  for (auto& p : parts) {
    rep.exceptions.insert(rep.exceptions.end(), p.exceptions.begin(), p.exceptions.end());
    rep.excluded.insert(rep.excluded.end(), p.excluded.begin(), p.excluded.end());
    rep.pointwise_violations.insert(rep.pointwise_violations.end(),
                                    p.pointwise_violations.begin(),
                                    p.pointwise_violations.end());
    rep.counts.total += p.counts.total;
    rep.counts.satisfying += p.counts.satisfying;
    if (p.have_best && (!have_best || p.best_r > best_r)) {  // ties: earlier chunk wins
      have_best = true;
      best_n = p.best_n;
      best_r = p.best_r;
    }
  }
  if (have_best) {
    // one rigorous evaluation at the argmax
    u64 bf = 0, sc = best_n;
    for (auto& p : parts)
      if (p.have_best && p.best_n == best_n) {
        bf = p.best_f;
        sc = p.best_scale;
      }
    RatioRecord rec;
    rec.subject_kind = SubjectKind::integer;
    rec.subject = best_n;
    rec.ratio = (WideValue::from_integer(bigint(bf)) /
                 (WideValue::from_integer(bigint(sc)) * loglog_wide(bigint(best_n))))
                    .to_directed();
    rec.exact = true;
    rec.verdict = classify(rec.ratio, thr);
    rep.max_ratio = rec;
  }
  rep.runtime_ms = elapsed_ms(t0);
  return rep;
}

inline u64 value_or_throw(std::optional<u64> v, const char* what) {
  if (!v) throw std::overflow_error(std::string("u64 fast path overflow in ") + what);
  return *v;
}

}  // namespace detail

// ---- the four threshold scans ----

// Exceptions to sigma*(n) <= t * n * log log n over [lo, hi).
inline ScanReport scan_sigma_star_exceptions(u64 lo, u64 hi, const Threshold& thr,
                                             const ScanOptions& opts = {}) {
  return detail::threshold_scan(
      "sigma-star", lo, hi, thr,
      [](u64, FactorView v) { return detail::value_or_throw(sigma_star_u64(v), "sigma*"); },
      [](u64 n, FactorView) { return n; },
      [](u64, FactorView, detail::ThresholdScanPartial&) {}, opts);
}

// Exceptions to sigma_exp(n) <= t * n * log log n over [lo, hi).
inline ScanReport scan_sigma_exp_exceptions(u64 lo, u64 hi, const Threshold& thr,
                                            const ScanOptions& opts = {}) {
  return detail::threshold_scan(
      "sigma-exp", lo, hi, thr,
      [](u64, FactorView v) { return detail::value_or_throw(sigma_exp_u64(v), "sigma^(e)"); },
      [](u64 n, FactorView) { return n; },
      [](u64, FactorView, detail::ThresholdScanPartial&) {}, opts);
}

// Exceptions to d(n) * d_exp(n) <= t * n * log log n over [lo, hi); also
// validates the pointwise inequality d(n)*d_exp(n) <= sigma_exp(n) for every
// n visited (violations land in report.pointwise_violations).
inline ScanReport scan_d_dexp_exceptions(u64 lo, u64 hi, const Threshold& thr,
                                         const ScanOptions& opts = {}) {
  return detail::threshold_scan(
      "d-dexp", lo, hi, thr,
      [](u64, FactorView v) {
        return detail::value_or_throw(d_u64(v), "d") *
               detail::value_or_throw(d_exp_u64(v), "d^(e)");
      },
      [](u64 n, FactorView) { return n; },
      [](u64 n, FactorView v, detail::ThresholdScanPartial& part) {
        u64 dd = detail::value_or_throw(d_u64(v), "d") *
                 detail::value_or_throw(d_exp_u64(v), "d^(e)");
        u64 se = detail::value_or_throw(sigma_exp_u64(v), "sigma^(e)");
        if (dd > se) part.pointwise_violations.push_back(n);
      },
      opts);
}

// ---- Derbal shape: sigma(n) < e^gamma * sigma*(n) * log log n ----
// (exception iff sigma(n) >= the right side; >= and > coincide since the
// right side is irrational for integer n >= 3)

inline ScanReport scan_derbal(u64 lo, u64 hi, const ScanOptions& opts = {}) {
  auto t0 = std::chrono::steady_clock::now();
  if (lo < 1 || lo >= hi) throw std::domain_error("scan_derbal: need 1 <= lo < hi");
  const DirectedValue eg = bound_table().e_gamma;
  const WideValue& egw = wide_e_gamma();
  auto parts = detail::run_partitioned<detail::ThresholdScanPartial>(
      lo, hi, opts.threads, [&](u64 clo, u64 chi) {
        detail::ThresholdScanPartial part;
        constexpr double kBand = 1e-9;
        enumerate_factored(
            clo, chi,
            [&](u64 n, FactorView v) {
              if (n < 3) {
                part.excluded.push_back(
                    {n, n == 1 ? "log log 1 is undefined (log 1 = 0)"
                               : "log log 2 is negative; ratio undefined in sign"});
                return;
              }
              ++part.counts.total;
              u64 s = detail::value_or_throw(sigma_u64(v), "sigma");
              u64 ss = detail::value_or_throw(sigma_star_u64(v), "sigma*");
              double ll = std::log(std::log(static_cast<double>(n)));
              double r = static_cast<double>(s) / (static_cast<double>(ss) * ll);
              if (!part.have_best || r > part.best_r) {
                part.have_best = true;
                part.best_n = n;
                part.best_f = s;
                part.best_scale = ss;
                part.best_r = r;
              }
              double rhs = eg.lo * static_cast<double>(ss) * ll;
              if (static_cast<double>(s) <= rhs * (1.0 - kBand)) {
                ++part.counts.satisfying;
                return;
              }
              // wide confirmation: sigma vs e^gamma * sigma* * loglog
              WideValue lhs = WideValue::from_integer(bigint(s));
              WideValue rhsw =
                  egw * WideValue::from_integer(bigint(ss)) * loglog_wide(bigint(n));
              RatioRecord rec;
              rec.subject_kind = SubjectKind::integer;
              rec.subject = n;
              rec.ratio = (lhs / (WideValue::from_integer(bigint(ss)) * loglog_wide(bigint(n)) *
                                  egw))
                              .to_directed();
              rec.exact = true;
              if (lhs.lo > rhsw.hi)
                rec.verdict = Verdict::ABOVE;
              else if (lhs.hi <= rhsw.lo)
                rec.verdict = Verdict::BELOW;
              else
                rec.verdict = Verdict::INDETERMINATE;
              if (rec.verdict == Verdict::BELOW)
                ++part.counts.satisfying;
              else
                part.exceptions.push_back(rec);
            },
            opts.sieve());
        return part;
      });
  ScanReport rep;
  rep.kind = "derbal";
  rep.lo = lo;
  rep.hi = hi;
  bool have_best = false;
  u64 best_n = 0, best_f = 0, best_sc = 1;
  double best_r = -1.0;
  for (auto& p : parts) {
    rep.exceptions.insert(rep.exceptions.end(), p.exceptions.begin(), p.exceptions.end());
    rep.excluded.insert(rep.excluded.end(), p.excluded.begin(), p.excluded.end());
    rep.counts.total += p.counts.total;
    rep.counts.satisfying += p.counts.satisfying;
    if (p.have_best && (!have_best || p.best_r > best_r)) {
      have_best = true;
      best_n = p.best_n;
      best_f = p.best_f;
      best_sc = p.best_scale;
      best_r = p.best_r;
    }
  }
  if (have_best) {
    RatioRecord rec;
    rec.subject_kind = SubjectKind::integer;
    rec.subject = best_n;
    rec.ratio = (WideValue::from_integer(bigint(best_f)) /
                 (WideValue::from_integer(bigint(best_sc)) * loglog_wide(bigint(best_n)) * egw))
                    .to_directed();
    rec.exact = true;
    rec.verdict = rec.ratio.hi <= 1.0 ? Verdict::BELOW
                  : rec.ratio.lo > 1.0 ? Verdict::ABOVE
                                       : Verdict::INDETERMINATE;
    rep.max_ratio = rec;
  }
  rep.runtime_ms = detail::elapsed_ms(t0);
  return rep;
}

// ---- pointwise Minculete inequality d(n) d_exp(n) <= sigma_exp(n) ----
// Pure integer comparison, defined for every n >= 1 (no log log involved).

inline ScanReport minculete_check(u64 lo, u64 hi, const ScanOptions& opts = {}) {
  auto t0 = std::chrono::steady_clock::now();
  if (lo < 1 || lo >= hi) throw std::domain_error("minculete_check: need 1 <= lo < hi");
  struct Partial {
    std::vector<RatioRecord> exceptions;
    ScanCounts counts;
  };
  auto parts = detail::run_partitioned<Partial>(lo, hi, opts.threads, [&](u64 clo, u64 chi) {
    Partial part;
    enumerate_factored(
        clo, chi,
        [&](u64 n, FactorView v) {
          ++part.counts.total;
          u64 dd = detail::value_or_throw(d_u64(v), "d") *
                   detail::value_or_throw(d_exp_u64(v), "d^(e)");
          u64 se = detail::value_or_throw(sigma_exp_u64(v), "sigma^(e)");
          if (dd <= se) {
            ++part.counts.satisfying;
          } else {
            RatioRecord rec;
            rec.subject_kind = SubjectKind::integer;
            rec.subject = n;
            rec.ratio = (WideValue::from_integer(bigint(dd)) /
                         WideValue::from_integer(bigint(se)))
                            .to_directed();
            rec.exact = true;
            rec.verdict = Verdict::ABOVE;
            part.exceptions.push_back(rec);
          }
        },
        opts.sieve());
    return part;
  });
  ScanReport rep;
  rep.kind = "minculete";
  rep.lo = lo;
  rep.hi = hi;
  rep.threshold = parse_threshold("1");
  for (auto& p : parts) {
    rep.exceptions.insert(rep.exceptions.end(), p.exceptions.begin(), p.exceptions.end());
    rep.counts.total += p.counts.total;
    rep.counts.satisfying += p.counts.satisfying;
  }
  rep.runtime_ms = detail::elapsed_ms(t0);
  return rep;
}

// ---- equality sigma*(n) = sigma_exp(n) and witness verification ----

struct EqualityWitness {
  bigint n;
  Factorization factorization;
  bigint common_value;  // = sigma*(n) = sigma_exp(n), re-verified on construction

  EqualityWitness(Factorization f, bigint common)
      : n(f.value()), factorization(std::move(f)), common_value(std::move(common)) {
    if (sigma_star(factorization) != common_value || sigma_exp(factorization) != common_value)
      throw std::logic_error("EqualityWitness: claimed common value fails re-verification");
  }
};

struct WitnessResult {
  bool equal = false;
  bigint n;
  bigint sigma_star_value;
  bigint sigma_exp_value;
  Factorization factorization;

  bigint difference() const { return sigma_star_value - sigma_exp_value; }
  EqualityWitness witness() const {
    if (!equal) throw std::logic_error("witness(): values differ");
    return EqualityWitness(factorization, sigma_star_value);
  }
};

// Exact big-integer confirmation of sigma*(n) = sigma_exp(n).
inline WitnessResult verify_witness(const Factorization& f) {
  WitnessResult r;
  r.n = f.value();
  r.factorization = f;
  r.sigma_star_value = sigma_star(f);
  r.sigma_exp_value = sigma_exp(f);
  r.equal = r.sigma_star_value == r.sigma_exp_value;
  return r;
}

struct EqualityOptions {
  bool include_one = false;  // n = 1 has sigma* = sigma_exp = 1 trivially
  ScanOptions scan;
};

inline std::vector<EqualityWitness> equality_search(u64 lo, u64 hi,
                                                    const EqualityOptions& opts = {}) {
  if (lo < 1 || lo >= hi) throw std::domain_error("equality_search: need 1 <= lo < hi");
  struct Partial {
    std::vector<u64> hits;
  };
  auto parts = detail::run_partitioned<Partial>(
      lo, hi, opts.scan.threads, [&](u64 clo, u64 chi) {
        Partial part;
        enumerate_factored(
            clo, chi,
            [&](u64 n, FactorView v) {
              if (n == 1) {
                if (opts.include_one) part.hits.push_back(1);
                return;
              }
              u64 ss = detail::value_or_throw(sigma_star_u64(v), "sigma*");
              u64 se = detail::value_or_throw(sigma_exp_u64(v), "sigma^(e)");
              if (ss == se) part.hits.push_back(n);
            },
            opts.scan.sieve());
        return part;
      });
  std::vector<EqualityWitness> out;
  for (auto& p : parts)
    for (u64 n : p.hits) {
      WitnessResult r = verify_witness(factorize(n));
      if (!r.equal) throw std::logic_error("equality_search: fast path hit fails exact recheck");
      out.push_back(r.witness());
    }
  return out;
}

// ---- density of sigma* > sigma_exp ----

inline DensityResult density_sigma_star_gt(u64 hi, const ScanOptions& opts = {}) {
  if (hi < 1000) throw std::domain_error("density_sigma_star_gt: need hi >= 10^3");
  auto t0 = std::chrono::steady_clock::now();
  auto parts = detail::run_partitioned<u64>(1, hi + 1, opts.threads, [&](u64 clo, u64 chi) {
    u64 count = 0;
    enumerate_factored(
        clo, chi,
        [&](u64 n, FactorView v) {
          (void)n;
          u64 ss = detail::value_or_throw(sigma_star_u64(v), "sigma*");
          u64 se = detail::value_or_throw(sigma_exp_u64(v), "sigma^(e)");
          if (ss > se) ++count;
        },
        opts.sieve());
    return count;
  });
  DensityResult res;
  res.hi = hi;
  for (u64 c : parts) res.count += c;
  res.proportion = static_cast<double>(res.count) / static_cast<double>(hi);
  res.runtime_ms = detail::elapsed_ms(t0);
  return res;
}

// ---- randomized audit: exact re-verification of unflagged n ----

// Draws `samples` integers from [report.lo, report.hi) that the report did
// NOT flag (neither exception nor excluded) and re-verifies each against the
// wide-interval comparator.  Returns the n values that turn out to be
// misses (empty = audit passed).
template <class ValueFn>
std::vector<u64> audit_unflagged(const ScanReport& report, ValueFn value, u64 samples,
                                 u64 seed) {
  if (!report.threshold) throw std::logic_error("audit_unflagged: report has no threshold");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> dist(report.lo, report.hi - 1);
  std::vector<u64> misses;
  for (u64 i = 0; i < samples; ++i) {
    u64 n = dist(rng);
    if (n < 3) continue;
    bool flagged = false;
    for (const auto& e : report.exceptions)
      if (e.subject == n) flagged = true;
    if (flagged) continue;
    Factorization f = factorize(n);
    std::vector<PrimePower> pps;
    for (const auto& pe : f.pairs())
      pps.push_back({static_cast<u64>(pe.first), pe.second});
    u64 fv = value(n, FactorView(pps));
    RatioRecord rec =
        detail::wide_compare(n, fv, report.threshold->num, report.threshold->den, n);
    if (rec.verdict != Verdict::BELOW) misses.push_back(n);
  }
  return misses;
}

}  // namespace ubv
