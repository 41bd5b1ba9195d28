// Primorial ratio verification: exact small-k ratios against frozen values,
// the incremental state sweep, checkpoint/resume determinism, the asymptotic
// tail certificate, and the reduction step inequality.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <random>

#include "ubv/primorial.hpp"
#include "ubv/report_io.hpp"

using namespace ubv;

namespace {
const PrimeTable& big_table() {
  static PrimeTable t = primes_up_to(kMillionthPrime + 1);
  return t;
}
}  // namespace

TEST_CASE("frozen exact ratios for small primorials") {
  // sigma*(N_k) / (N_k log log N_k), independently computed to 24 digits
  struct Row {
    u64 k;
    double ratio;
    Verdict verdict;
  };
  const Row rows[] = {
      {2, 3.4293665667005872, Verdict::ABOVE}, {3, 1.9605800214449640, Verdict::ABOVE},
      {4, 1.6360071034244227, Verdict::ABOVE}, {5, 1.4617185489320867, Verdict::ABOVE},
      {6, 1.3811513793990848, Verdict::ABOVE}, {7, 1.3245571426427800, Verdict::ABOVE},
      {8, 1.2928153475004459, Verdict::BELOW}, {9, 1.2677652475998337, Verdict::BELOW},
      {10, 1.2435783642438311, Verdict::BELOW},
  };
  Threshold thr = parse_threshold("1.3007");
  for (const auto& row : rows) {
    RatioRecord rec = primorial_ratio(row.k, big_table(), thr);
    INFO("k=" << row.k);
    CHECK(rec.subject == row.k);
    CHECK(rec.subject_kind == SubjectKind::primorial_index);
    CHECK(rec.verdict == row.verdict);
    CHECK(rec.exact);
    CHECK(rec.ratio.contains(row.ratio));
    CHECK(rec.ratio.width() < 1e-9);
  }
  CHECK_THROWS_AS(primorial_ratio(1, big_table(), thr), std::domain_error);
}

TEST_CASE("incremental state agrees with full wide re-summation") {
  PrimorialState s;
  for (u64 i = 1; i <= 2000; ++i) {
    s.advance(big_table().prime_at(i));
    if (i == 100 || i == 2000) {
      DirectedValue fast = detail::state_ratio(s);
      DirectedValue slow = detail::wide_primorial_ratio(i, big_table());
      // the cheap enclosure must contain the tight one
      CHECK(fast.lo <= slow.lo);
      CHECK(fast.hi >= slow.hi);
      CHECK(fast.width() < 1e-9);
    }
  }
  CHECK(s.k == 2000);
  CHECK(s.p_k == big_table().prime_at(2000));
}

TEST_CASE("verify_primorial_range: clean stretch and violating prefix") {
  Threshold thr = parse_threshold("1.3007");
  ScanReport clean = verify_primorial_range(8, 1000, thr, big_table());
  CHECK(clean.kind == "primorial");
  CHECK(clean.exceptions.empty());
  CHECK(clean.counts.total == 993);
  CHECK(clean.counts.satisfying == 993);
  REQUIRE(clean.max_ratio.has_value());
  CHECK(clean.max_ratio->subject == 8);  // largest ratio in range is at k = 8

  ScanReport dirty = verify_primorial_range(2, 7, thr, big_table());
  CHECK(dirty.exceptions.size() == 6);
  for (const auto& e : dirty.exceptions) CHECK(e.verdict == Verdict::ABOVE);
  CHECK(dirty.exceptions.front().subject == 2);
  CHECK(dirty.exceptions.back().subject == 7);

  CHECK_THROWS_AS(verify_primorial_range(1, 10, thr, big_table()), std::domain_error);
  CHECK_THROWS_AS(verify_primorial_range(9, 8, thr, big_table()), std::domain_error);
}

TEST_CASE("checkpoint write, parse, resume determinism") {
  namespace fs = std::filesystem;
  std::string path = (fs::temp_directory_path() / "ubv_ckpt_test.txt").string();
  std::remove(path.c_str());
  Threshold thr = parse_threshold("1.3007");

  VerifyOptions w;
  w.checkpoint_path = path;
  w.checkpoint_every = 100;
  ScanReport full = verify_primorial_range(2, 1500, thr, big_table(), w);

  auto pts = load_checkpoints(path);
  REQUIRE(!pts.empty());
  CHECK(pts.size() == 15);  // every 100 steps over ~1500 indices
  for (const auto& s : pts) {
    CHECK(s.k % 100 == 0);
    CHECK(s.p_k == big_table().prime_at(s.k));
    CHECK(s.sum_log1p.lo <= s.sum_log1p.hi);
  }

  // resuming from the file must reproduce a fresh run bit-for-bit
  VerifyOptions r;
  r.checkpoint_path = path;
  ScanReport resumed = verify_primorial_range(1200, 1500, thr, big_table(), r);
  ScanReport fresh = verify_primorial_range(1200, 1500, thr, big_table());
  CHECK(canonical_equal(resumed, fresh));
  CHECK(resumed.counts.total == 301);

  std::remove(path.c_str());
}

TEST_CASE("two identical runs are byte-identical") {
  Threshold thr = parse_threshold("1.3007");
  ScanReport a = verify_primorial_range(2, 600, thr, big_table());
  ScanReport b = verify_primorial_range(2, 600, thr, big_table());
  CHECK(canonical_equal(a, b));
}

TEST_CASE("asymptotic tail certificate") {
  TailCertificate good = asymptotic_tail_certificate(parse_threshold("1.3007"), big_table());
  CHECK(good.ok);
  CHECK(good.index_check_ok);
  CHECK(good.cutoffs_ok);
  CHECK(good.verdict == Verdict::BELOW);
  CHECK(good.monotone_grid_ok);
  CHECK(good.grid.size() == 32);
  CHECK(good.ratio_at_pk.hi <= 1.3007);
  for (std::size_t i = 1; i < good.grid.size(); ++i)
    CHECK(good.grid[i].second.hi <= good.grid[i - 1].second.hi);

  // below the e^B floor every certificate must fail
  TailCertificate bad = asymptotic_tail_certificate(parse_threshold("1.29887"), big_table());
  CHECK_FALSE(bad.ok);
  CHECK(bad.verdict == Verdict::ABOVE);
  CHECK(bad.failure_reason.find("floor") != std::string::npos);

  // a table that cannot confirm the millionth prime cannot certify anything
  PrimeTable small = primes_up_to(1000);
  TailCertificate nope = asymptotic_tail_certificate(parse_threshold("1.3007"), small);
  CHECK_FALSE(nope.ok);
  CHECK_FALSE(nope.index_check_ok);
}

TEST_CASE("reduction step: sigma*(n)/n <= sigma*(N_k)/N_k below N_{k+1}", "[property]") {
  CHECK(reduction_step_check(30, big_table()));      // n = N_3 itself (equality)
  CHECK(reduction_step_check(570570, big_table()));  // the extremal exception
  CHECK(reduction_step_check(510510, big_table()));  // N_7
  std::mt19937_64 rng(555);
  std::uniform_int_distribution<u64> dist(6, 223'092'869);
  for (int i = 0; i < 2000; ++i) CHECK(reduction_step_check(dist(rng), big_table()));
  CHECK_THROWS_AS(reduction_step_check(5, big_table()), std::domain_error);
  CHECK_THROWS_AS(reduction_step_check(223'092'870, big_table()), std::domain_error);
}

TEST_CASE("exact and interval primorial paths agree at the exact-limit boundary") {
  // k <= 20 takes the exact big-integer route; spot check both sides of it
  Threshold thr = parse_threshold("1.3007");
  for (u64 k : {19ull, 20ull, 21ull, 22ull}) {
    RatioRecord rec = primorial_ratio(k, big_table(), thr);
    DirectedValue wide = detail::wide_primorial_ratio(k, big_table());
    CHECK(rec.ratio.lo <= wide.hi);
    CHECK(rec.ratio.hi >= wide.lo);
    CHECK(rec.verdict == Verdict::BELOW);
  }
}
