#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace conjdim {

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::vector<std::string> samples;  // first few failing inputs
};

struct PropertyReport {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;

  int total_cases() const;
  int total_failures() const;
  bool passed() const { return total_failures() == 0; }
};

/// Randomized checks: field axioms, orbit-stabilizer counts, resultant
/// symmetry and multiplicativity, Newton identities on random points,
/// invariance of every built-in invariant system, and fuzzed reducible
/// polynomials never certified irreducible.  `scale` multiplies case counts.
PropertyReport run_property_suites(std::uint64_t seed = 20240601, int scale = 1);

}  // namespace conjdim
