#pragma once
// DirectedValue: a closed double-precision interval [lo, hi] guaranteed to
// contain the real quantity it stands for.  Every inequality claim the
// toolkit certifies is backed by one of these, never by a raw double compare.
//
// Rounding policy: IEEE-754 +,-,*,/ are correctly rounded, so one nextafter
// step outward per operation suffices.  exp/log/log1p come from libm, which
// is faithfully rounded (< 1 ulp error) on mainstream platforms; we widen
// those by two ulps, i.e. one extra ulp beyond the worst documented error.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ubv/common.hpp"

namespace ubv {

namespace detail {
inline double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
inline double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }
inline double down2(double x) { return down(down(x)); }
inline double up2(double x) { return up(up(x)); }
}  // namespace detail

struct DirectedValue {
  double lo = 0.0;
  double hi = 0.0;

  DirectedValue() = default;
  DirectedValue(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(lo <= hi))  // also rejects NaN endpoints
      throw std::invalid_argument("DirectedValue: lo > hi or NaN");
  }

  // Exactly representable point value (integers up to 2^53, machine doubles).
  static DirectedValue exact(double x) { return {x, x}; }

  // Enclosure of a decimal literal: strtod rounds to nearest, widen one ulp.
  static DirectedValue from_decimal(const std::string& text) {
    std::size_t pos = 0;
    double d = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("from_decimal: trailing junk in " + text);
    return {detail::down(d), detail::up(d)};
  }

  double width() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const DirectedValue& o) const { return lo <= o.lo && o.hi <= hi; }

  DirectedValue operator-() const { return {-hi, -lo}; }
};

inline DirectedValue operator+(const DirectedValue& a, const DirectedValue& b) {
  return {detail::down(a.lo + b.lo), detail::up(a.hi + b.hi)};
}

inline DirectedValue operator-(const DirectedValue& a, const DirectedValue& b) {
  return {detail::down(a.lo - b.hi), detail::up(a.hi - b.lo)};
}

inline DirectedValue operator*(const DirectedValue& a, const DirectedValue& b) {
  double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  double lo = std::fmin(std::fmin(p1, p2), std::fmin(p3, p4));
  double hi = std::fmax(std::fmax(p1, p2), std::fmax(p3, p4));
  return {detail::down(lo), detail::up(hi)};
}

inline DirectedValue operator/(const DirectedValue& a, const DirectedValue& b) {
  if (b.lo <= 0.0 && b.hi >= 0.0)
    throw std::domain_error("DirectedValue: division by interval containing zero");
  double q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo, q4 = a.hi / b.hi;
  double lo = std::fmin(std::fmin(q1, q2), std::fmin(q3, q4));
  double hi = std::fmax(std::fmax(q1, q2), std::fmax(q3, q4));
  return {detail::down(lo), detail::up(hi)};
}

inline DirectedValue operator+(const DirectedValue& a, double s) { return a + DirectedValue::exact(s); }
inline DirectedValue operator+(double s, const DirectedValue& a) { return DirectedValue::exact(s) + a; }
inline DirectedValue operator-(const DirectedValue& a, double s) { return a - DirectedValue::exact(s); }
inline DirectedValue operator-(double s, const DirectedValue& a) { return DirectedValue::exact(s) - a; }
inline DirectedValue operator*(const DirectedValue& a, double s) { return a * DirectedValue::exact(s); }
inline DirectedValue operator*(double s, const DirectedValue& a) { return DirectedValue::exact(s) * a; }
inline DirectedValue operator/(const DirectedValue& a, double s) { return a / DirectedValue::exact(s); }
inline DirectedValue operator/(double s, const DirectedValue& a) { return DirectedValue::exact(s) / a; }

// exp/log/log1p: faithfully-rounded libm assumed, widened two ulps outward.
inline DirectedValue exp(const DirectedValue& a) {
  return {detail::down2(std::exp(a.lo)), detail::up2(std::exp(a.hi))};
}

inline DirectedValue log(const DirectedValue& a) {
  if (a.lo <= 0.0) throw std::domain_error("DirectedValue: log of interval touching (-inf, 0]");
  return {detail::down2(std::log(a.lo)), detail::up2(std::log(a.hi))};
}

inline DirectedValue log1p(const DirectedValue& a) {
  if (a.lo <= -1.0) throw std::domain_error("DirectedValue: log1p of interval touching (-inf, -1]");
  return {detail::down2(std::log1p(a.lo)), detail::up2(std::log1p(a.hi))};
}

// Enclosure of log log x for an exact point x with log x > 0.
inline DirectedValue loglog_point(double x) {
  return log(log(DirectedValue::exact(x)));
}

}  // namespace ubv
