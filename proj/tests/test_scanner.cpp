// Exhaustive scan engine: frozen exception sets from an independent oracle,
// two-phase comparison guarantees, determinism and partition invariance,
// equality/density searches, and the randomized unflagged-sample audit.

#include <catch2/catch_amalgamated.hpp>

#include "ubv/report_io.hpp"
#include "ubv/scan.hpp"

using namespace ubv;

namespace {
const Threshold& thr() {
  static Threshold t = parse_threshold("1.3007");
  return t;
}

std::vector<u64> subjects(const ScanReport& r) {
  std::vector<u64> out;
  for (const auto& e : r.exceptions) out.push_back(e.subject);
  return out;
}

// Frozen oracle: every n < 10^5 with sigma*(n) > 1.3007 n log log n.
const std::vector<u64> kSigmaStarExceptions = {
    3,    4,    5,    6,    7,    8,    9,    10,   12,    14,    15,    18,
    20,   21,   22,   26,   30,   42,   60,   66,   70,    78,    90,    102,
    114,  138,  210,  330,  390,  462,  510,  546,  570,   690,   2310,  2730,
    3570, 3990, 4290, 4830, 6090, 6510, 30030, 39270, 43890, 46410, 51870, 53130};
}  // namespace

TEST_CASE("sigma* exceptions below 10^5 match the frozen oracle exactly") {
  ScanReport rep = scan_sigma_star_exceptions(3, 100'000, thr());
  CHECK(subjects(rep) == kSigmaStarExceptions);
  CHECK_FALSE(rep.has_indeterminate());
  for (const auto& e : rep.exceptions) {
    CHECK(e.verdict == Verdict::ABOVE);
    CHECK(e.exact);
    CHECK(e.ratio.lo > 1.3007);
  }
  CHECK(rep.counts.total == 100'000 - 3);
  CHECK(rep.counts.satisfying == rep.counts.total - rep.exceptions.size());
  // the last exception below 53,131 is 53,130 — the boundary the threshold
  // statement "n >= 53,131 with two exceptions" pivots on
  CHECK(subjects(rep).back() == 53'130);
  // extremal ratio in any range starting at 3 sits at n = 3
  REQUIRE(rep.max_ratio.has_value());
  CHECK(rep.max_ratio->subject == 3);
  CHECK(rep.max_ratio->ratio.contains(14.177183749181978));
}

TEST_CASE("scan excludes n = 1, 2 with reasons") {
  ScanReport rep = scan_sigma_star_exceptions(1, 100, thr());
  REQUIRE(rep.excluded.size() == 2);
  CHECK(rep.excluded[0].n == 1);
  CHECK(rep.excluded[1].n == 2);
  CHECK(rep.excluded[0].reason.find("undefined") != std::string::npos);
  CHECK(rep.counts.total == 97);  // 3..99
}

TEST_CASE("mid-range exception window") {
  // frozen: the only exceptions in [40000, 60000) are these four
  ScanReport rep = scan_sigma_star_exceptions(40'000, 60'000, thr());
  CHECK(subjects(rep) == std::vector<u64>{43'890, 46'410, 51'870, 53'130});
}

TEST_CASE("the extremal exception 570570 and its frozen ratio") {
  ScanReport rep = scan_sigma_star_exceptions(570'500, 570'600, thr());
  REQUIRE(subjects(rep) == std::vector<u64>{570'570});
  const RatioRecord& e = rep.exceptions[0];
  CHECK(e.verdict == Verdict::ABOVE);
  CHECK(e.exact);
  CHECK(e.ratio.contains(1.3125173188759487));
  CHECK(e.ratio.width() < 1e-12);
}

TEST_CASE("sigma_exp exceptions match the frozen oracle") {
  ScanReport rep = scan_sigma_exp_exceptions(3, 1000, thr());
  CHECK(subjects(rep) == std::vector<u64>{3, 4, 5, 6, 7, 8, 9, 12, 16, 20, 36});
  ScanReport clean = scan_sigma_exp_exceptions(37, 20'000, thr());
  CHECK(clean.exceptions.empty());
}

TEST_CASE("d * d_exp exceptions: published bound is off by one") {
  ScanReport rep = scan_d_dexp_exceptions(3, 1000, thr());
  // n = 8: d = 4, d_exp = 2, product 8 > 1.3007 * 8 * loglog 8 = 7.6179...
  CHECK(subjects(rep) == std::vector<u64>{3, 4, 8});
  ScanReport clean = scan_d_dexp_exceptions(9, 20'000, thr());
  CHECK(clean.exceptions.empty());
  CHECK(clean.pointwise_violations.empty());
}

TEST_CASE("derbal exceptions below 17, clean after") {
  ScanReport rep = scan_derbal(3, 17);
  CHECK(subjects(rep) == std::vector<u64>{3, 4, 5, 8, 16});
  for (const auto& e : rep.exceptions) CHECK(e.verdict == Verdict::ABOVE);
  ScanReport clean = scan_derbal(17, 20'000);
  CHECK(clean.exceptions.empty());
  CHECK_FALSE(rep.threshold.has_value());  // threshold is e^gamma, not rational
}

TEST_CASE("pointwise minculete inequality holds from n = 1") {
  ScanReport rep = minculete_check(1, 20'000);
  CHECK(rep.exceptions.empty());
  CHECK(rep.counts.total == 19'999);
  CHECK(rep.counts.satisfying == 19'999);
}

TEST_CASE("equality search matches the frozen witness list") {
  auto ws = equality_search(1, 10'000);
  std::vector<u64> ns;
  for (const auto& w : ws) ns.push_back(w.n.convert_to<u64>());
  CHECK(ns == std::vector<u64>{20, 45, 320, 6615});
  for (const auto& w : ws) {
    Factorization f = factorize(w.n.convert_to<u64>());
    CHECK(sigma_star(f) == w.common_value);
    CHECK(sigma_exp(f) == w.common_value);
  }

  EqualityOptions with_one;
  with_one.include_one = true;
  auto ws1 = equality_search(1, 100, with_one);
  REQUIRE(ws1.size() == 3);
  CHECK(ws1[0].n == 1);
  CHECK(ws1[1].n == 20);
  CHECK(ws1[2].n == 45);
}

TEST_CASE("verify_witness reports both values on inequality") {
  WitnessResult bad = verify_witness(factorize(12));
  CHECK_FALSE(bad.equal);
  CHECK(bad.sigma_star_value == 20);
  CHECK(bad.sigma_exp_value == 18);
  CHECK(bad.difference() == 2);
  CHECK_THROWS_AS(bad.witness(), std::logic_error);

  WitnessResult good = verify_witness(factorize(20));
  CHECK(good.equal);
  CHECK(good.witness().common_value == 30);
}

TEST_CASE("density counts at frozen checkpoints") {
  CHECK(density_sigma_star_gt(1000).count == 776);
  CHECK(density_sigma_star_gt(10'000).count == 7770);
  DensityResult d = density_sigma_star_gt(100'000);
  CHECK(d.count == 77'794);
  CHECK(d.proportion > 0.597);
  CHECK_THROWS_AS(density_sigma_star_gt(999), std::domain_error);
}

TEST_CASE("determinism: identical inputs give identical reports") {
  ScanReport a = scan_sigma_star_exceptions(3, 50'000, thr());
  ScanReport b = scan_sigma_star_exceptions(3, 50'000, thr());
  CHECK(canonical_equal(a, b));
}

TEST_CASE("partition invariance: thread count does not change content", "[property]") {
  ScanOptions one, three, five;
  one.threads = 1;
  three.threads = 3;
  five.threads = 5;
  ScanReport a = scan_sigma_star_exceptions(3, 120'000, thr(), one);
  ScanReport b = scan_sigma_star_exceptions(3, 120'000, thr(), three);
  ScanReport c = scan_sigma_star_exceptions(3, 120'000, thr(), five);
  CHECK(canonical_equal(a, b));
  CHECK(canonical_equal(a, c));

  CHECK(density_sigma_star_gt(100'000, three).count == 77'794);
  auto ws = equality_search(1, 10'000, {.include_one = false, .scan = three});
  CHECK(ws.size() == 4);
}

TEST_CASE("segment size does not change content") {
  ScanOptions tiny;
  tiny.segment_size = 4096;
  ScanReport a = scan_sigma_star_exceptions(3, 60'000, thr(), tiny);
  ScanReport b = scan_sigma_star_exceptions(3, 60'000, thr());
  CHECK(canonical_equal(a, b));
}

TEST_CASE("randomized audit of unflagged integers", "[property]") {
  ScanReport rep = scan_sigma_star_exceptions(3, 100'000, thr());
  auto misses = audit_unflagged(
      rep, [](u64, FactorView v) { return *sigma_star_u64(v); }, 500, 20240817);
  CHECK(misses.empty());
}

TEST_CASE("scan input validation") {
  CHECK_THROWS_AS(scan_sigma_star_exceptions(0, 10, thr()), std::domain_error);
  CHECK_THROWS_AS(scan_sigma_star_exceptions(10, 10, thr()), std::domain_error);
  CHECK_THROWS_AS(scan_derbal(20, 10), std::domain_error);
  CHECK_THROWS_AS(minculete_check(5, 2), std::domain_error);
}
