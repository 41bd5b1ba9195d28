#pragma once
// Explicit analytic machinery behind the asymptotic tail: the prime
// reciprocal-sum upper bound and Chebyshev-theta lower bound (both with hard
// validity cutoffs), the derived A1/A2 factors, their ratio, and a
// from-scratch certification of the Mertens constant.
//
// Everything returns DirectedValue enclosures; no bare double ever backs an
// inequality claim.

#include "ubv/constants.hpp"
#include "ubv/interval.hpp"
#include "ubv/prime_table.hpp"

namespace ubv {

// A1 as the ratio-bound numerator exists in two forms differing in the
// exponent of the second correction term's log power:
//   combined_log2: exp(B + 1/(10 log^2 x) + 4/(15 log^2 x))   [default]
//   dusart_log3:   exp(B + 1/(10 log^2 x) + 4/(15 log^3 x))
// combined_log2 is the larger of the two, hence a valid (safe) upper factor
// whenever dusart_log3 is; it is also the form that yields the 1.3007 bound.
enum class A1Form { combined_log2, dusart_log3 };

// Upper bound for Sum_{p<=x} 1/p: loglog x + B + 1/(10 log^2 x) + 4/(15 log^3 x).
// Valid for x >= 10,372.
inline DirectedValue mertens_upper(double x, const BoundTable& t = bound_table()) {
  if (!(x >= static_cast<double>(t.mertens_cutoff)))
    throw std::domain_error("mertens_upper: x below validity cutoff 10372");
  DirectedValue L = log(DirectedValue::exact(x));
  DirectedValue L2 = L * L;
  return log(L) + t.B + 1.0 / (10.0 * L2) + 4.0 / (15.0 * (L2 * L));
}

// Lower bound for theta(x) = Sum_{p<=x} log p: x (1 - 0.006788 / log x).
// Valid for x >= 10,544,111.
inline DirectedValue theta_lower(double x, const BoundTable& t = bound_table()) {
  if (!(x >= static_cast<double>(t.theta_cutoff)))
    throw std::domain_error("theta_lower: x below validity cutoff 10544111");
  DirectedValue L = log(DirectedValue::exact(x));
  return DirectedValue::exact(x) * (1.0 - t.theta_deficit() / L);
}

inline DirectedValue a1(double x, A1Form form = A1Form::combined_log2,
                        const BoundTable& t = bound_table()) {
  if (!(x >= static_cast<double>(t.mertens_cutoff)))
    throw std::domain_error("a1: x below validity cutoff 10372");
  DirectedValue L = log(DirectedValue::exact(x));
  DirectedValue L2 = L * L;
  DirectedValue third =
      form == A1Form::combined_log2 ? 4.0 / (15.0 * L2) : 4.0 / (15.0 * (L2 * L));
  return exp(t.B + 1.0 / (10.0 * L2) + third);
}

inline DirectedValue a2(double x, const BoundTable& t = bound_table()) {
  if (!(x >= static_cast<double>(t.theta_cutoff)))
    throw std::domain_error("a2: x below validity cutoff 10544111");
  DirectedValue L = log(DirectedValue::exact(x));
  return 1.0 + log1p(-(t.theta_deficit() / L)) / L;
}

// A1(x)/A2(x): for N_k <= n < N_{k+1} with p_k = x,
//   sigma*(n) / (n log log n) <= A1(x)/A2(x),
// so certifying ratio_bound(x).hi <= c certifies the claim for all larger k
// (both factors move the right way as x grows).
inline DirectedValue ratio_bound(double x, A1Form form = A1Form::combined_log2,
                                 const BoundTable& t = bound_table()) {
  return a1(x, form, t) / a2(x, t);
}

// B = gamma + Sum_p [log(1 - 1/p) + 1/p], truncated at a prime cutoff with a
// rigorous tail: each dropped term lies in (-1/(2p(p-1)), 0), and
// Sum_{p>x} 1/(2p(p-1)) <= Sum_{m>x} 1/(2m(m-1)) = 1/(2x) by telescoping.
inline DirectedValue compute_mertens_B(u64 cutoff, const BoundTable& t = bound_table()) {
  if (cutoff < 100'000)
    throw std::domain_error("compute_mertens_B: cutoff below 10^5 cannot certify 5 decimals");
  PrimeTable table = primes_up_to(cutoff);
  DirectedValue sum = t.gamma;
  for (u64 p : table.primes()) {
    DirectedValue inv = 1.0 / DirectedValue::exact(static_cast<double>(p));
    DirectedValue term = log1p(-inv) + inv;
    if (term.hi > 0.0) term.hi = 0.0;  // analytically every term is negative
    sum = sum + term;
  }
  DirectedValue inv2x = 1.0 / DirectedValue::exact(2.0 * static_cast<double>(cutoff));
  return sum + DirectedValue(-inv2x.hi, 0.0);
}

}  // namespace ubv
