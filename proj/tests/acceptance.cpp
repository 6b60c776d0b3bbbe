// One line per acceptance criterion: "<n> PASS|FAIL <summary>", followed
// by indented counterexamples and notes. Exit status is non-zero when any
// criterion fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "borel/verify.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : borel::default_seed;
  static const char* const titles[] = {
      "filter totals of the strongly stable order",
      "cardinality-resolved counts in three variables",
      "rank sizes, height and width",
      "lattice laws, stable meets, pentagons",
      "comparability against the reachability oracle",
      "layer-wise filter criterion",
      "stable filter counts and walk counts",
      "fountains",
      "bijection integrity",
      "term orders",
  };
  int failed = 0;
  double total_ms = 0;
  for (int k = 1; k <= 10; ++k) {
    const auto r = borel::run_suite("acceptance-" + std::to_string(k), seed);
    total_ms += r.runtime_ms;
    if (!r.ok()) ++failed;
    std::cout << k << " " << (r.ok() ? "PASS" : "FAIL") << "  " << titles[k - 1] << "  (" << r.passed << " passed, " << r.failed
              << " failed, " << static_cast<long>(r.runtime_ms) << " ms)\n";
    for (const auto& f : r.failures) std::cout << "    counterexample: " << f << "\n";
    for (const auto& n : r.notes) std::cout << "    note: " << n << "\n";
  }
  std::cout << (10 - failed) << "/10 criteria pass, " << static_cast<long>(total_ms) << " ms\n";
  return failed == 0 ? 0 : 1;
}
