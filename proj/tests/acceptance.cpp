// Acceptance gate: runs every numbered claim check and prints one
// PASS/FAIL/SKIPPED line per criterion.  Exits nonzero if any criterion
// fails.  `--long-run` enables the 10^9 density confirmation; `--only N`
// restricts to a single criterion.

#include <cstring>
#include <iostream>

#include "ubv/reproduce.hpp"

int main(int argc, char** argv) {
  ubv::ReproduceOptions opts;
  if (const char* dir = std::getenv("UBV_FIXTURE_DIR")) opts.fixture_dir = dir;
  opts.threads = ubv::resolve_threads(std::nullopt);
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--long-run") == 0) {
      opts.long_run = true;
    } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      opts.only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--long-run] [--only N]\n";
      return 2;
    }
  }
  auto results = ubv::run_reproduction(opts);
  std::cout << ubv::render_criteria(results);
  return ubv::reproduction_passed(results) ? 0 : 1;
}
