#pragma once
// The named analytic constants with their validity cutoffs, stored as
// high-precision decimal enclosures.  B and gamma are cross-validated at
// test time against compute_mertens_B and exp-of-gamma identities.

#include "ubv/interval.hpp"
#include "ubv/wide_interval.hpp"

namespace ubv {

// 50+ digit reference decimals (independently computed, frozen here).
inline constexpr const char* kMertensBDigits =
    "0.26149721284764278375542683860869585905156664826120";
inline constexpr const char* kGammaDigits =
    "0.57721566490153286060651209008240243104215933593992";
inline constexpr const char* kExpGammaDigits =
    "1.78107241799019798523650410310717954916964521430343";
inline constexpr const char* kExpBDigits =
    "1.29887332140903032083369088035729524046911038725802";
inline constexpr const char* kSixExpGammaOverPiSqDigits =
    "1.08276219326092458012218803819092657018430665558360";

struct BoundTable {
  DirectedValue B;                    // Mertens constant
  DirectedValue gamma;                // Euler's constant
  DirectedValue e_gamma;              // e^gamma
  DirectedValue e_B;                  // e^B, the floor of the ratio bound
  DirectedValue six_egamma_over_pi2;  // 6 e^gamma / pi^2
  // theta deficit 0.006788 kept as an exact decimal rational 6788/10^6
  i64 theta_deficit_num = 6788;
  i64 theta_deficit_den = 1'000'000;
  u64 mertens_cutoff = 10'372;      // Sum_{p<=x} 1/p bound valid from here
  u64 theta_cutoff = 10'544'111;    // theta(x) lower bound valid from here

  DirectedValue theta_deficit() const {
    return DirectedValue::exact(static_cast<double>(theta_deficit_num)) /
           DirectedValue::exact(static_cast<double>(theta_deficit_den));
  }
};

inline const BoundTable& bound_table() {
  static const BoundTable t = [] {
    BoundTable b;
    b.B = DirectedValue::from_decimal(kMertensBDigits);
    b.gamma = DirectedValue::from_decimal(kGammaDigits);
    b.e_gamma = DirectedValue::from_decimal(kExpGammaDigits);
    b.e_B = DirectedValue::from_decimal(kExpBDigits);
    b.six_egamma_over_pi2 = DirectedValue::from_decimal(kSixExpGammaOverPiSqDigits);
    return b;
  }();
  return t;
}

// Wide-precision twins for phase-2 / INDETERMINATE resolution paths.
inline const WideValue& wide_mertens_B() {
  static const WideValue v = WideValue::from_decimal(kMertensBDigits);
  return v;
}

inline const WideValue& wide_e_gamma() {
  static const WideValue v = WideValue::from_decimal(kExpGammaDigits);
  return v;
}

}  // namespace ubv
