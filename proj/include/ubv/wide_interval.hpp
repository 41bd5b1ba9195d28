#pragma once
// WideValue: 50-decimal-digit interval arithmetic (Boost cpp_bin_float_50)
// used wherever double-precision DirectedValues cannot separate a comparison:
// phase-2 scan confirmations, exact small-primorial cross-checks, log log of
// big integers.  Widening is by relative epsilon bumps, far coarser than the
// few-ulp error of the underlying operations, and asserts positive operands
// where that coarseness would otherwise be unsound.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ubv/bigint.hpp"
#include "ubv/common.hpp"
#include "ubv/interval.hpp"

namespace ubv {

using float50 = boost::multiprecision::cpp_bin_float_50;

namespace detail {
// ~16 ulps of outward slack at 50 digits; vastly smaller than any margin we
// ever need to certify, vastly larger than cpp_bin_float's rounding error.
inline const float50 kWideEps = []
  { return float50("1e-45"); }();

inline float50 wdown(const float50& x) { return x - abs(x) * kWideEps; }
inline float50 wup(const float50& x) { return x + abs(x) * kWideEps; }
}  // namespace detail

struct WideValue {
  float50 lo, hi;

  static WideValue exact(const float50& x) { return {x, x}; }

  static WideValue from_integer(const bigint& n) {
    // cpp_bin_float_50 has 168 mantissa bits; big witnesses (~2^91) convert
    // exactly, but widen defensively for anything larger.
    float50 x(n);
    return {detail::wdown(x), detail::wup(x)};
  }

  static WideValue from_decimal(const std::string& text) {
    float50 x(text);
    return {detail::wdown(x), detail::wup(x)};
  }

  DirectedValue to_directed() const {
    double dlo = static_cast<double>(lo), dhi = static_cast<double>(hi);
    // conversion rounds to nearest: one ulp outward re-establishes enclosure
    return {ubv::detail::down(dlo), ubv::detail::up(dhi)};
  }

  bool contains(const WideValue& o) const { return lo <= o.lo && o.hi <= hi; }
};

inline WideValue operator+(const WideValue& a, const WideValue& b) {
  return {detail::wdown(a.lo + b.lo), detail::wup(a.hi + b.hi)};
}

inline WideValue operator-(const WideValue& a, const WideValue& b) {
  return {detail::wdown(a.lo - b.hi), detail::wup(a.hi - b.lo)};
}

inline WideValue operator*(const WideValue& a, const WideValue& b) {
  float50 p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  float50 lo = (std::min)({p1, p2, p3, p4}), hi = (std::max)({p1, p2, p3, p4});
  return {detail::wdown(lo), detail::wup(hi)};
}

inline WideValue operator/(const WideValue& a, const WideValue& b) {
  if (b.lo <= 0 && b.hi >= 0) throw std::domain_error("WideValue: division through zero");
  float50 q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo, q4 = a.hi / b.hi;
  float50 lo = (std::min)({q1, q2, q3, q4}), hi = (std::max)({q1, q2, q3, q4});
  return {detail::wdown(lo), detail::wup(hi)};
}

inline WideValue log(const WideValue& a) {
  if (a.lo <= 0) throw std::domain_error("WideValue: log of non-positive interval");
  return {detail::wdown(log(a.lo)), detail::wup(log(a.hi))};
}

inline WideValue exp(const WideValue& a) {
  return {detail::wdown(exp(a.lo)), detail::wup(exp(a.hi))};
}

// Enclosure of log log n for an exact integer n >= 3.
inline WideValue loglog_wide(const bigint& n) {
  if (n < 3) throw std::domain_error("loglog_wide: need n >= 3 for a positive log log");
  return log(log(WideValue::from_integer(n)));
}

// Enclosure of the exact rational num/den.
inline WideValue ratio_wide(const bigint& num, const bigint& den) {
  return WideValue::from_integer(num) / WideValue::from_integer(den);
}

}  // namespace ubv
