// Tour of the five divisor functions on a few interesting integers,
// including the two famous equality witnesses sigma*(n) = sigma_exp(n).

#include <iostream>

#include "ubv/divisors.hpp"
#include "ubv/wide_interval.hpp"

using namespace ubv;

int main() {
  const char* inputs[] = {"12",    "30",     "42",           "570570",
                          "20",    "382200", "680890228200", "2^49 * 4363953127297"};
  for (const char* text : inputs) {
    Factorization f = parse_factorization(text);
    const bigint& n = f.value();
    std::cout << "n = " << n << " = " << f.to_string() << "\n";
    std::cout << "  sigma     = " << sigma(f) << "\n";
    std::cout << "  sigma*    = " << sigma_star(f) << "\n";
    std::cout << "  sigma_exp = " << sigma_exp(f) << "\n";
    std::cout << "  d         = " << d(f) << ", d_exp = " << d_exp(f) << "\n";
    if (n >= 3) {
      DirectedValue r = (WideValue::from_integer(sigma_star(f)) /
                         (WideValue::from_integer(n) * loglog_wide(n)))
                            .to_directed();
      std::cout << "  sigma*/(n log log n) ~ " << r.lo << "\n";
    }
    if (sigma_star(f) == sigma_exp(f))
      std::cout << "  ** sigma* = sigma_exp: equality witness **\n";
    std::cout << "\n";
  }
  return 0;
}
