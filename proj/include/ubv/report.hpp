#pragma once
// RatioRecord: one evaluated instance of f(n)/(n log log n) (or the primorial
// analogue) with exactness metadata.  ScanReport: the outcome of a range scan
// or primorial sweep — exceptions, extremal ratio, counts, exclusions.

#include <optional>
#include <string>
#include <vector>

#include "ubv/interval.hpp"
#include "ubv/threshold.hpp"

namespace ubv {

enum class SubjectKind { integer, primorial_index };

struct RatioRecord {
  SubjectKind subject_kind = SubjectKind::integer;
  u64 subject = 0;      // n, or the primorial index k
  DirectedValue ratio;  // enclosure of the ratio
  bool exact = false;   // true when backed by big-integer/rational arithmetic
  Verdict verdict = Verdict::INDETERMINATE;
};

struct ExcludedN {
  u64 n;
  std::string reason;
};

struct ScanCounts {
  u64 total = 0;       // subjects scanned (range length minus exclusions)
  u64 satisfying = 0;  // subjects meeting the bound / predicate
};

struct ScanReport {
  std::string kind;     // sigma-star | sigma-exp | d-dexp | derbal | minculete | primorial
  u64 lo = 0, hi = 0;   // half-open subject range (for primorial: [k_lo, k_hi+1))
  std::optional<Threshold> threshold;
  std::vector<RatioRecord> exceptions;  // ascending by subject, all exact-confirmed
  std::optional<RatioRecord> max_ratio;
  ScanCounts counts;
  std::vector<ExcludedN> excluded;
  std::vector<u64> pointwise_violations;  // d-dexp only: n with d*d_exp > sigma_exp
  u64 runtime_ms = 0;

  // A report is a verification failure if any exception survived with an
  // unresolved verdict, or an embedded pointwise invariant broke.
  bool has_indeterminate() const {
    for (const auto& e : exceptions)
      if (e.verdict == Verdict::INDETERMINATE) return true;
    return false;
  }
};

struct DensityResult {
  u64 hi = 0;
  u64 count = 0;        // #{1 <= n <= hi : sigma*(n) > sigma_exp(n)}
  double proportion = 0.0;
  u64 runtime_ms = 0;
};

}  // namespace ubv
