// The primorial reduction in one screen: exact ratios
// sigma*(N_k) / (N_k log log N_k) for small k, the crossover below 1.3007 at
// k = 8, and the analytic tail bound that covers every k >= 10^6.

#include <iostream>

#include "ubv/primorial.hpp"

using namespace ubv;

int main() {
  PrimeTable table = primes_up_to(kMillionthPrime + 1);
  Threshold thr = parse_threshold("1.3007");

  std::cout << "k   p_k   sigma*(N_k)/(N_k log log N_k)      verdict vs 1.3007\n";
  for (u64 k = 2; k <= 12; ++k) {
    RatioRecord r = primorial_ratio(k, table, thr);
    std::cout << k << "   " << table.prime_at(k) << "   [" << r.ratio.lo << ", " << r.ratio.hi
              << "]   " << to_string(r.verdict) << "\n";
  }

  std::cout << "\nsweep k in [8, 10^6]: ";
  ScanReport rep = verify_primorial_range(8, 1'000'000, thr, table);
  std::cout << rep.exceptions.size() << " violations in " << rep.runtime_ms << " ms\n";

  std::cout << "\nasymptotic tail (all k >= 10^6):\n";
  TailCertificate cert = asymptotic_tail_certificate(thr, table);
  std::cout << "  ratio bound at p_1000000 = [" << cert.ratio_at_pk.lo << ", "
            << cert.ratio_at_pk.hi << "] -> " << to_string(cert.verdict)
            << (cert.ok ? " (certificate OK)" : " (certificate FAILED)") << "\n";
  return 0;
}
