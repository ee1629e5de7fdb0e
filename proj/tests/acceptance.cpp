// One line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <cstring>

#include "conjdim/regress.hpp"

int main(int argc, char** argv) {
  bool verbose = argc > 1 && std::strcmp(argv[1], "-v") == 0;
  int failed = 0;
  for (const auto& c : conjdim::criteria()) {
    const conjdim::CriterionResult r = conjdim::run_criterion(c);
    std::printf("%s\n", conjdim::summary_line(r).c_str());
    if (verbose || !r.passed)
      for (const auto& line : r.checks) std::printf("    %s\n", line.c_str());
    std::fflush(stdout);
    failed += !r.passed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(conjdim::criteria().size()) - failed,
              conjdim::criteria().size());
  return failed ? 1 : 0;
}
