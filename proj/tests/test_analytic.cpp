// Analytic bound machinery: the prime-sum and theta bounds against frozen
// high-precision partial sums, the A1/A2 ratio at the millionth prime, and
// the from-scratch Mertens constant certification.

#include <catch2/catch_amalgamated.hpp>

#include "ubv/analytic.hpp"
#include "ubv/threshold.hpp"

using namespace ubv;

// Frozen 25-digit reference sums (independently computed):
//   Sum_{p <= 10^5} 1/p = 2.705272179047264148042556
//   Sum_{p <= 10^6} 1/p = 2.887328099567672712348011
//   theta(10544111)     = 10539694.81309849874359214
//   theta(15485863)     = 15479837.6211631568377367

TEST_CASE("mertens_upper dominates the true prime reciprocal sum") {
  CHECK(mertens_upper(1e5).lo > 2.705272179047264);
  CHECK(mertens_upper(1e6).lo > 2.887328099567672);
  // ...but not by much (the bound overshoots by ~6e-4 at 10^5)
  CHECK(mertens_upper(1e5).hi < 2.7060);
  CHECK(mertens_upper(1e6).hi < 2.8880);
  CHECK_THROWS_AS(mertens_upper(10'371.0), std::domain_error);
  CHECK_NOTHROW(mertens_upper(10'372.0));
}

TEST_CASE("theta_lower stays below the true theta") {
  DirectedValue at_cutoff = theta_lower(10'544'111.0);
  CHECK(at_cutoff.hi < 10'539'694.813098);
  CHECK(at_cutoff.contains(10'539'684.985532119));  // frozen value of the bound itself

  DirectedValue at_pk = theta_lower(15'485'863.0);
  CHECK(at_pk.hi < 15'479'837.621163);
  CHECK(at_pk.contains(15'479'513.543259471));

  CHECK_THROWS_AS(theta_lower(10'544'110.0), std::domain_error);
}

TEST_CASE("A1, A2 and the ratio bound at the millionth prime") {
  const double x = 15'485'863.0;
  DirectedValue va1 = a1(x);
  DirectedValue va2 = a2(x);
  DirectedValue vr = ratio_bound(x);
  // frozen: A1 = 1.300612112484895321, A2 = 0.99997522865846999194,
  //         A1/A2 = 1.3006443311898322932
  CHECK(va1.contains(1.3006121124848953));
  CHECK(va1.width() < 1e-12);
  CHECK(va2.contains(0.99997522865847));
  CHECK(vr.contains(1.3006443311898323));
  CHECK(vr.hi <= 1.3007);  // the headline certification

  // stricter Dusart form of the second correction term:
  // frozen A1 = 1.2994236697919646072, ratio = 1.2994558590568524745
  DirectedValue vd = ratio_bound(x, A1Form::dusart_log3);
  CHECK(vd.contains(1.2994558590568525));
  CHECK(vd.hi < vr.lo);  // log3 form is strictly smaller at this x
}

TEST_CASE("ratio bound decreases along a geometric grid") {
  double x = 15'485'863.0;
  double prev_hi = ratio_bound(x).hi;
  for (int i = 0; i < 12; ++i) {
    x *= 2.9;
    DirectedValue rb = ratio_bound(x);
    CHECK(rb.hi < prev_hi);
    prev_hi = rb.hi;
  }
  // floor: the bound can never fall below e^B = 1.29887...
  CHECK(prev_hi > 1.29887);
}

TEST_CASE("compute_mertens_B certifies the stored constant") {
  DirectedValue b5 = compute_mertens_B(100'000);
  DirectedValue b6 = compute_mertens_B(1'000'000);
  const DirectedValue& stored = bound_table().B;
  // the computed enclosure must contain the entire stored enclosure
  CHECK(b5.contains(stored));
  CHECK(b6.contains(stored));
  CHECK(b6.width() < 1e-5);
  CHECK(b6.width() < b5.width());
  // frozen check on the truncated partial sum: the upper end of the computed
  // interval reflects gamma + partial sum (tail only lowers the bottom)
  CHECK(b6.hi > 0.261497);
  CHECK(b6.lo < 0.261498);
  CHECK_THROWS_AS(compute_mertens_B(50'000), std::domain_error);
}

TEST_CASE("stored constants carry correct leading digits") {
  const BoundTable& t = bound_table();
  auto in = [](const DirectedValue& v, double lo, double hi) {
    return v.lo >= lo && v.hi < hi;
  };
  CHECK(in(t.B, 0.26149, 0.26150));
  CHECK(in(t.gamma, 0.57721, 0.57722));
  CHECK(in(t.e_gamma, 1.78107, 1.78108));
  CHECK(in(t.e_B, 1.29887, 1.29888));
  CHECK(in(t.six_egamma_over_pi2, 1.08276, 1.08277));
  for (const DirectedValue* v : {&t.B, &t.gamma, &t.e_gamma, &t.e_B, &t.six_egamma_over_pi2})
    CHECK(v->width() < 1e-15);

  // internal consistency: exp of stored enclosures overlaps stored exponentials
  DirectedValue eg = exp(t.gamma), eb = exp(t.B);
  CHECK(eg.lo <= t.e_gamma.hi);
  CHECK(eg.hi >= t.e_gamma.lo);
  CHECK(eb.lo <= t.e_B.hi);
  CHECK(eb.hi >= t.e_B.lo);
}

TEST_CASE("a corrupted constant table is caught, not absorbed") {
  BoundTable bad = bound_table();
  bad.B = DirectedValue(bad.B.lo + 1e-3, bad.B.hi + 1e-3);  // shift B upward
  DirectedValue rb = ratio_bound(15'485'863.0, A1Form::combined_log2, bad);
  CHECK(rb.lo > 1.3007);  // the certification must now fail
  Threshold thr = parse_threshold("1.3007");
  CHECK(classify(rb, thr) == Verdict::ABOVE);

  // and the recomputation disagrees with the corrupted value
  DirectedValue computed = compute_mertens_B(100'000);
  CHECK_FALSE(computed.contains(bad.B));
}
