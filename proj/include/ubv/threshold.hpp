#pragma once
// Thresholds are exact decimal rationals ("1.3007" = 13007/10000, "28/15"),
// never floats.  Interval-vs-threshold comparisons go through exact rational
// arithmetic on the interval endpoints, so a verdict is never a rounding
// artifact.  Ties count as satisfying the bound.

#include <cctype>
#include <stdexcept>
#include <string>

#include "ubv/bigint.hpp"
#include "ubv/interval.hpp"

namespace ubv {

struct Threshold {
  bigint num{0};
  bigint den{1};
  std::string text;  // as given by the user

  bigrat value() const { return bigrat(num, den); }
  std::string canonical() const {
    bigrat v = value();
    return boost::multiprecision::numerator(v).str() + "/" +
           boost::multiprecision::denominator(v).str();
  }
  double approx() const { return static_cast<double>(value()); }

  friend bool operator==(const Threshold& a, const Threshold& b) {
    return a.value() == b.value();
  }
};

// Accepts "1.3007", "28/15", "2".
inline Threshold parse_threshold(const std::string& text) {
  auto fail = [&] { throw std::invalid_argument("parse_threshold: bad threshold: " + text); };
  Threshold t;
  t.text = text;
  std::size_t slash = text.find('/');
  if (slash != std::string::npos) {
    try {
      t.num = bigint(text.substr(0, slash));
      t.den = bigint(text.substr(slash + 1));
    } catch (const std::exception&) {
      fail();
    }
    if (t.den <= 0 || t.num <= 0) fail();
    return t;
  }
  std::size_t dot = text.find('.');
  std::string digits = text;
  u64 frac_len = 0;
  if (dot != std::string::npos) {
    digits = text.substr(0, dot) + text.substr(dot + 1);
    frac_len = text.size() - dot - 1;
  }
  if (digits.empty()) fail();
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) fail();
  try {
    t.num = bigint(digits);
  } catch (const std::exception&) {
    fail();
  }
  t.den = 1;
  for (u64 i = 0; i < frac_len; ++i) t.den *= 10;
  if (t.num <= 0) fail();
  return t;
}

// Exact compare of a finite double against the threshold.
inline bool leq_threshold(double x, const Threshold& t) {
  return bigrat(x) * t.den <= bigrat(t.num);
}

inline bool gt_threshold(double x, const Threshold& t) {
  return bigrat(x) * t.den > bigrat(t.num);
}

enum class Verdict { BELOW, ABOVE, INDETERMINATE };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::BELOW: return "BELOW";
    case Verdict::ABOVE: return "ABOVE";
    case Verdict::INDETERMINATE: return "INDETERMINATE";
  }
  return "?";
}

// BELOW  <=> the whole interval satisfies ratio <= threshold.
// ABOVE  <=> the whole interval violates it.
// INDETERMINATE: the interval straddles; caller must refine or fail loudly.
inline Verdict classify(const DirectedValue& ratio, const Threshold& t) {
  if (leq_threshold(ratio.hi, t)) return Verdict::BELOW;
  if (gt_threshold(ratio.lo, t)) return Verdict::ABOVE;
  return Verdict::INDETERMINATE;
}

}  // namespace ubv
