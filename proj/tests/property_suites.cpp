// Randomized property suites; optional arguments: seed, scale.
#include <cstdio>
#include <cstdlib>

#include "conjdim/properties.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240601;
  const int scale = argc > 2 ? std::atoi(argv[2]) : 1;
  const conjdim::PropertyReport r = conjdim::run_property_suites(seed, scale);
  for (const auto& s : r.suites) {
    std::printf("%-48s %5d cases %3d failures\n", s.name.c_str(), s.cases, s.failures);
    for (const auto& x : s.samples) std::printf("    %s\n", x.c_str());
  }
  std::printf("seed %llu: %d cases, %d failures\n", static_cast<unsigned long long>(seed), r.total_cases(),
              r.total_failures());
  return r.passed() ? 0 : 1;
}
