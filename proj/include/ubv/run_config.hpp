#pragma once
// Process-level knobs shared by the CLI and tests: thread count (explicit
// flag beats the UBV_THREADS environment variable beats 1), sieve segment
// size, and the memory budget that turns oversized requests into
// resource_error instead of OOM.

#include <cstdlib>
#include <optional>
#include <string>

#include "ubv/common.hpp"
#include "ubv/scan.hpp"

namespace ubv {

inline unsigned resolve_threads(std::optional<unsigned> cli_value) {
  if (cli_value && *cli_value > 0) return *cli_value;
  if (const char* env = std::getenv("UBV_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0 && v <= 4096) return static_cast<unsigned>(v);
  }
  return 1;
}

inline ScanOptions make_scan_options(std::optional<unsigned> threads_flag,
                                     std::optional<u64> segment_size,
                                     std::optional<u64> memory_budget) {
  ScanOptions o;
  o.threads = resolve_threads(threads_flag);
  if (segment_size) {
    if (*segment_size < 64) throw std::domain_error("segment size must be >= 64");
    o.segment_size = *segment_size;
  }
  if (memory_budget) o.memory_budget = *memory_budget;
  return o;
}

}  // namespace ubv
