#pragma once
// End-to-end reproduction harness: eleven numbered checks covering every
// headline result, each yielding PASS / FAIL / SKIPPED with a one-line
// detail.  The CLI `reproduce` subcommand and the acceptance test binary are
// both thin wrappers around run_reproduction().
//
// Expected values are frozen from an independent oracle; nothing here is
// derived from the code paths under test.

#include <memory>
#include <numeric>
#include <set>

#include "ubv/analytic.hpp"
#include "ubv/report_io.hpp"
#include "ubv/run_config.hpp"

namespace ubv {

enum class CriterionStatus { PASS, FAIL, SKIPPED };

inline const char* to_string(CriterionStatus s) {
  switch (s) {
    case CriterionStatus::PASS: return "PASS";
    case CriterionStatus::FAIL: return "FAIL";
    case CriterionStatus::SKIPPED: return "SKIPPED";
  }
  return "?";
}

struct CriterionResult {
  int id = 0;
  std::string name;
  CriterionStatus status = CriterionStatus::FAIL;
  std::string detail;
  u64 runtime_ms = 0;
  u64 budget_ms = 0;  // stated runtime expectation, informational
};

struct ReproduceOptions {
  bool long_run = false;        // adds the 10^9 density confirmation
  std::string fixture_dir;      // where density_1e6.json lives (may be empty)
  unsigned threads = 1;
  u64 segment_size = u64(1) << 22;
  std::optional<int> only;      // run a single criterion by id
  const BoundTable* table = nullptr;  // constant-table override for negative tests
};

namespace detail {

// Frozen expectations (oracle-derived, see tests for provenance comments).
inline constexpr u64 kDesk = 9'699'691;  // 8th primorial: scan ceiling for small ranges
inline constexpr u64 kDensity1e6Count = 778'337;
inline constexpr u64 kMaxException = 570'570;
inline constexpr u64 kSecondException = 510'510;

inline bool ratio_within(const RatioRecord& r, double lo, double hi) {
  return r.ratio.lo >= lo && r.ratio.hi < hi;
}

inline std::string fmt_count(std::size_t got, std::size_t want) {
  return "expected " + std::to_string(want) + ", got " + std::to_string(got);
}

}  // namespace detail

inline std::vector<CriterionResult> run_reproduction(const ReproduceOptions& opts = {},
                                                     std::ostream* progress = nullptr) {
  const BoundTable& bt = opts.table ? *opts.table : bound_table();
  ScanOptions scan_opts;
  scan_opts.threads = opts.threads == 0 ? 1 : opts.threads;
  scan_opts.segment_size = opts.segment_size;
  const Threshold thr13007 = parse_threshold("1.3007");

  std::vector<CriterionResult> results;
  std::shared_ptr<PrimeTable> big_table;  // primes to p_1000000, built lazily once
  auto need_big_table = [&]() -> const PrimeTable& {
    if (!big_table)
      big_table = std::make_shared<PrimeTable>(primes_up_to(kMillionthPrime + 1));
    return *big_table;
  };

  auto run = [&](int id, std::string name, u64 budget_ms, auto body) {
    if (opts.only && *opts.only != id) return;
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.budget_ms = budget_ms;
    auto t0 = std::chrono::steady_clock::now();
    try {
      body(r);
    } catch (const std::exception& e) {
      r.status = CriterionStatus::FAIL;
      r.detail = std::string("exception: ") + e.what();
    }
    r.runtime_ms = detail::elapsed_ms(t0);
    if (progress)
      *progress << "criterion " << r.id << " [" << to_string(r.status) << "] " << r.name
                << " (" << r.runtime_ms << " ms)\n"
                << std::flush;
    results.push_back(std::move(r));
  };

  // 1: desk-scale unitary-sigma scan — the largest exception and its ratio.
  run(1, "sigma* scan [3, 9699691) @ 1.3007: max exception 570570, ratio in [1.3125, 1.3126)",
      60'000, [&](CriterionResult& r) {
        ScanReport rep = scan_sigma_star_exceptions(3, detail::kDesk, thr13007, scan_opts);
        if (rep.has_indeterminate()) {
          r.detail = "indeterminate verdicts present";
          return;
        }
        if (rep.exceptions.empty()) {
          r.detail = "no exceptions found";
          return;
        }
        const RatioRecord& last = rep.exceptions.back();
        if (last.subject != detail::kMaxException) {
          r.detail = "max exception is " + std::to_string(last.subject);
          return;
        }
        if (!detail::ratio_within(last, 1.3125, 1.3126)) {
          r.detail = "ratio enclosure [" + detail::shortest(last.ratio.lo) + ", " +
                     detail::shortest(last.ratio.hi) + "] outside [1.3125, 1.3126)";
          return;
        }
        r.status = CriterionStatus::PASS;
        r.detail = std::to_string(rep.exceptions.size()) +
                   " exceptions, max at 570570 with ratio " +
                   detail::shortest(last.ratio.lo);
      });

  // 2: only two exceptions survive past 53,131.
  run(2, "sigma* scan [53132, 9699691): exceptions exactly {510510, 570570}", 60'000,
      [&](CriterionResult& r) {
        ScanReport rep = scan_sigma_star_exceptions(53'132, detail::kDesk, thr13007, scan_opts);
        std::vector<u64> subjects;
        for (const auto& e : rep.exceptions) subjects.push_back(e.subject);
        if (subjects != std::vector<u64>{detail::kSecondException, detail::kMaxException}) {
          r.detail = detail::fmt_count(subjects.size(), 2);
          return;
        }
        if (!detail::ratio_within(rep.exceptions[0], 1.3245, 1.3246) ||
            !detail::ratio_within(rep.exceptions[1], 1.3125, 1.3126)) {
          r.detail = "ratios off: " + detail::shortest(rep.exceptions[0].ratio.lo) + ", " +
                     detail::shortest(rep.exceptions[1].ratio.lo);
          return;
        }
        r.status = CriterionStatus::PASS;
        r.detail = "ratios " + detail::shortest(rep.exceptions[0].ratio.lo) + " and " +
                   detail::shortest(rep.exceptions[1].ratio.lo);
      });

  // 3: primorial sweep k in [8, 10^6] clean; k in [2, 7] all violate.
  run(3, "primorial ratios: k in [8, 10^6] all below 1.3007, k in [2, 7] all above", 120'000,
      [&](CriterionResult& r) {
        const PrimeTable& pt = need_big_table();
        ScanReport rep = verify_primorial_range(8, 1'000'000, thr13007, pt);
        if (!rep.exceptions.empty()) {
          r.detail = std::to_string(rep.exceptions.size()) + " violations, first at k=" +
                     std::to_string(rep.exceptions.front().subject);
          return;
        }
        for (u64 k = 2; k <= 7; ++k) {
          RatioRecord rec = primorial_ratio(k, pt, thr13007);
          if (rec.verdict != Verdict::ABOVE) {
            r.detail = "k=" + std::to_string(k) + " unexpectedly " + to_string(rec.verdict);
            return;
          }
        }
        r.status = CriterionStatus::PASS;
        r.detail = "10^6 - 7 indices verified below, small primorials confirmed above";
      });

  // 4: analytic tail certificate is sharp at the right threshold.
  run(4, "tail certificate: succeeds at 1.3007, fails at 1.29887 (e^B floor)", 1'000,
      [&](CriterionResult& r) {
        const PrimeTable& pt = need_big_table();
        TailCertificate good =
            asymptotic_tail_certificate(thr13007, pt, A1Form::combined_log2, bt);
        TailCertificate bad = asymptotic_tail_certificate(parse_threshold("1.29887"), pt,
                                                          A1Form::combined_log2, bt);
        if (!good.ok) {
          r.detail = "1.3007 certificate failed: " + good.failure_reason;
          return;
        }
        if (bad.ok) {
          r.detail = "1.29887 certificate unexpectedly succeeded";
          return;
        }
        r.status = CriterionStatus::PASS;
        r.detail = "ratio bound at p_1000000 = [" + detail::shortest(good.ratio_at_pk.lo) +
                   ", " + detail::shortest(good.ratio_at_pk.hi) + "]";
      });

  // 5: exponential-divisor corollaries.  The published d*d_exp starting point
  // n >= 8 is off by one: n = 8 itself violates (4*2 = 8 > 1.3007*8*loglog 8
  // = 7.6179...), so the scan from 8 must flag exactly {8} and nothing else,
  // giving the corrected statement "for all n >= 9".
  run(5, "corollaries: sigma_exp clean from 37; d*d_exp flags exactly {8}, clean from 9",
      90'000, [&](CriterionResult& r) {
        ScanReport se = scan_sigma_exp_exceptions(37, detail::kDesk + 1, thr13007, scan_opts);
        if (!se.exceptions.empty()) {
          r.detail = "sigma_exp: unexpected exception at n=" +
                     std::to_string(se.exceptions.front().subject);
          return;
        }
        ScanReport dd = scan_d_dexp_exceptions(8, detail::kDesk + 1, thr13007, scan_opts);
        std::vector<u64> subjects;
        for (const auto& e : dd.exceptions) subjects.push_back(e.subject);
        if (subjects != std::vector<u64>{8}) {
          r.detail = "d*d_exp exceptions from 8: " + detail::fmt_count(subjects.size(), 1);
          return;
        }
        if (!dd.pointwise_violations.empty()) {
          r.detail = "pointwise d*d_exp <= sigma_exp violated";
          return;
        }
        r.status = CriterionStatus::PASS;
        r.detail = "sigma_exp clean; d*d_exp exception set {8} (published bound off by one)";
      });

  // 6: the pointwise inequality d(n) d_exp(n) <= sigma_exp(n) through 10^7.
  run(6, "pointwise d*d_exp <= sigma_exp for all n <= 10^7", 60'000,
      [&](CriterionResult& r) {
        ScanReport rep = minculete_check(1, 10'000'001, scan_opts);
        if (!rep.exceptions.empty()) {
          r.detail = "violated at n=" + std::to_string(rep.exceptions.front().subject);
          return;
        }
        r.status = CriterionStatus::PASS;
        r.detail = std::to_string(rep.counts.total) + " integers checked";
      });

  // 7: sigma(n) < e^gamma sigma*(n) loglog n from 17 on.
  run(7, "Derbal scan [17, 10^7): zero exceptions", 60'000, [&](CriterionResult& r) {
    ScanReport rep = scan_derbal(17, 10'000'000, scan_opts);
    if (!rep.exceptions.empty()) {
      r.detail = "exception at n=" + std::to_string(rep.exceptions.front().subject);
      return;
    }
    r.status = CriterionStatus::PASS;
    r.detail = std::to_string(rep.counts.total) + " integers checked";
  });

  // 8: sigma* = sigma_exp witnesses, small and large.
  run(8, "equality witnesses {20, 45, 320, 6615, 382200}; two large witnesses verify",
      30'000, [&](CriterionResult& r) {
        auto ws = equality_search(1, 1'000'000, {.include_one = false, .scan = scan_opts});
        std::vector<u64> got;
        for (const auto& w : ws) got.push_back(w.n.convert_to<u64>());
        if (got != std::vector<u64>{20, 45, 320, 6615, 382200}) {
          r.detail = "witness set mismatch, " + detail::fmt_count(got.size(), 5);
          return;
        }
        WitnessResult w1 = verify_witness(parse_factorization("680890228200"));
        if (!w1.equal) {
          r.detail = "680890228200 fails: difference " + w1.difference().str();
          return;
        }
        WitnessResult w2 = verify_witness(parse_factorization("2^49 * 4363953127297"));
        if (!w2.equal) {
          r.detail = "2^49 * 4363953127297 fails: difference " + w2.difference().str();
          return;
        }
        if (w2.sigma_star_value != bigint("2456687209745202300915302274")) {
          r.detail = "large witness common value mismatch";
          return;
        }
        r.status = CriterionStatus::PASS;
        r.detail = "5 witnesses in [1, 10^6); both explicit witnesses verified exactly";
      });

  // 9: density of sigma* > sigma_exp.
  run(9, "density baseline at 10^6 (long-run: 10^9 matches 0.778307 +/- 1e-6)",
      opts.long_run ? 1'800'000 : 30'000, [&](CriterionResult& r) {
        DensityResult base = density_sigma_star_gt(1'000'000, scan_opts);
        if (base.count != detail::kDensity1e6Count) {
          r.detail = "10^6 count " + std::to_string(base.count) + " != " +
                     std::to_string(detail::kDensity1e6Count);
          return;
        }
        if (!(base.proportion > 0.597)) {
          r.detail = "proportion " + detail::shortest(base.proportion) + " <= 0.597";
          return;
        }
        std::string fixture_note;
        if (!opts.fixture_dir.empty()) {
          std::string path = opts.fixture_dir + "/density_1e6.json";
          try {
            DensityResult fix = density_from_json(ordered_json::parse(load_text(path)));
            if (fix.hi != base.hi || fix.count != base.count) {
              r.detail = "fixture disagrees: count " + std::to_string(fix.count);
              return;
            }
            fixture_note = "; fixture matched";
          } catch (const std::exception& e) {
            fixture_note = std::string("; fixture unavailable (") + e.what() + ")";
          }
        }
        if (opts.long_run) {
          DensityResult big = density_sigma_star_gt(1'000'000'000, scan_opts);
          if (std::abs(big.proportion - 0.778307) > 1e-6) {
            r.detail = "10^9 proportion " + detail::shortest(big.proportion) +
                       " not within 1e-6 of 0.778307";
            return;
          }
          r.status = CriterionStatus::PASS;
          r.detail = "10^6: " + std::to_string(base.count) + "/1000000; 10^9 proportion " +
                     detail::shortest(big.proportion) + fixture_note;
          return;
        }
        r.status = CriterionStatus::PASS;
        r.detail = "count " + std::to_string(base.count) + ", proportion " +
                   detail::shortest(base.proportion) + fixture_note +
                   "; 10^9 portion skipped (enable with --long-run)";
      });

  // 10: property suite — formulas vs brute force, multiplicativity, reduction.
  run(10, "oracle equivalence to 10^5; multiplicativity and reduction on random samples",
      30'000, [&](CriterionResult& r) {
        constexpr DivisorFunctionKind kinds[] = {
            DivisorFunctionKind::SIGMA, DivisorFunctionKind::SIGMA_STAR,
            DivisorFunctionKind::SIGMA_EXP, DivisorFunctionKind::D,
            DivisorFunctionKind::D_EXP};
        u64 checked = 0;
        bool failed = false;
        enumerate_factored(1, 100'001, [&](u64 n, FactorView v) {
          if (failed) return;
          Factorization f = Factorization::from_view(v);
          for (auto k : kinds)
            if (evaluate(k, f) != brute_force_divisor_oracle(n, k)) {
              r.detail = "formula/oracle mismatch at n=" + std::to_string(n);
              failed = true;
              return;
            }
          ++checked;
        });
        if (failed) return;

        std::mt19937_64 rng(1337);
        std::uniform_int_distribution<u64> small(2, 30'000);
        for (int i = 0; i < 10'000; ++i) {
          u64 a = small(rng), b = small(rng);
          if (std::gcd(a, b) != 1) continue;
          Factorization fa = factorize(a), fb = factorize(b), fab = factorize(a * b);
          for (auto k : kinds)
            if (evaluate(k, fab) != evaluate(k, fa) * evaluate(k, fb)) {
              r.detail = "multiplicativity broke at (" + std::to_string(a) + ", " +
                         std::to_string(b) + ")";
              return;
            }
        }

        const PrimeTable& pt = need_big_table();
        std::uniform_int_distribution<u64> mid(6, 223'092'869);
        for (int i = 0; i < 10'000; ++i) {
          u64 n = mid(rng);
          if (!reduction_step_check(n, pt)) {
            r.detail = "primorial reduction failed at n=" + std::to_string(n);
            return;
          }
        }
        r.status = CriterionStatus::PASS;
        r.detail = std::to_string(checked) + " oracle matches; 10^4 pairs, 10^4 reductions";
      });

  // 11: the constants behind the analytic step.
  run(11, "Mertens constant recomputation and hard-coded constant containment", 10'000,
      [&](CriterionResult& r) {
        DirectedValue computed = compute_mertens_B(1'000'000, bt);
        if (!(computed.width() < 1e-5)) {
          r.detail = "computed B width " + detail::shortest(computed.width()) + " >= 1e-5";
          return;
        }
        // the recomputed enclosure must contain the full hard-coded enclosure
        if (!(computed.lo <= bt.B.lo && bt.B.hi <= computed.hi)) {
          r.detail = "computed B [" + detail::shortest(computed.lo) + ", " +
                     detail::shortest(computed.hi) + "] does not contain stored B";
          return;
        }
        auto prefix_ok = [](const DirectedValue& v, double lo, double hi) {
          return v.lo >= lo && v.hi < hi;
        };
        if (!prefix_ok(bt.B, 0.26149, 0.26150)) {
          r.detail = "stored B outside [0.26149, 0.26150)";
          return;
        }
        if (!prefix_ok(bt.e_gamma, 1.78107, 1.78108)) {
          r.detail = "stored e^gamma outside [1.78107, 1.78108)";
          return;
        }
        if (!prefix_ok(bt.e_B, 1.29887, 1.29888)) {
          r.detail = "stored e^B outside [1.29887, 1.29888)";
          return;
        }
        if (!prefix_ok(bt.six_egamma_over_pi2, 1.08, 1.09)) {
          r.detail = "stored 6 e^gamma / pi^2 outside [1.08, 1.09)";
          return;
        }
        // cross-check: exp of stored B and gamma against stored e^B, e^gamma
        DirectedValue eB = exp(bt.B), eg = exp(bt.gamma);
        if (eB.hi < bt.e_B.lo || eB.lo > bt.e_B.hi || eg.hi < bt.e_gamma.lo ||
            eg.lo > bt.e_gamma.hi) {
          r.detail = "stored exponential constants inconsistent with B / gamma";
          return;
        }
        r.status = CriterionStatus::PASS;
        r.detail = "computed B = [" + detail::shortest(computed.lo) + ", " +
                   detail::shortest(computed.hi) + "] contains stored enclosure";
      });

  return results;
}

inline bool reproduction_passed(const std::vector<CriterionResult>& rs) {
  if (rs.empty()) return false;
  for (const auto& r : rs)
    if (r.status == CriterionStatus::FAIL) return false;
  return true;
}

inline std::string render_criteria(const std::vector<CriterionResult>& rs) {
  std::ostringstream out;
  for (const auto& r : rs) {
    out << "criterion " << r.id << ": " << to_string(r.status) << " - " << r.name << "\n";
    out << "    " << r.detail << " [" << r.runtime_ms << " ms";
    if (r.budget_ms) out << ", budget " << r.budget_ms << " ms";
    out << "]\n";
  }
  out << (reproduction_passed(rs) ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << "\n";
  return out.str();
}

}  // namespace ubv
