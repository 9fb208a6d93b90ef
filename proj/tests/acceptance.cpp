#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "ncv/suite.hpp"

// Prints one PASS/FAIL line per acceptance criterion. Exit status is 0 iff all pass.
// Optional arguments: criterion numbers to run, --extended for the larger cases, -v.

int main(int argc, char** argv) {
  ncv::SuiteOptions opts;
  opts.quick = true;
  std::vector<int> only;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--extended"))
      opts.quick = false;
    else if (!std::strcmp(argv[i], "-v"))
      verbose = true;
    else
      only.push_back(std::atoi(argv[i]));
  }

  int failures = 0;
  for (const auto& c : ncv::acceptance_criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    auto t0 = std::chrono::steady_clock::now();
    ncv::CheckReport rep;
    std::string error;
    try {
      rep = c.run(opts);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    int checks = static_cast<int>(rep.results.size()), failed = 0, noted = 0;
    for (const auto& r : rep.results) {
      if (r.passed) continue;
      (r.notable ? noted : failed) += 1;
    }
    bool ok = error.empty() && rep.passed() && secs <= c.seconds_limit;
    failures += !ok;

    std::printf("%s  criterion %2d  %-26s %4d checks  %7.2fs", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), checks,
                secs);
    if (noted) std::printf("  [%d reported observations]", noted);
    if (secs > c.seconds_limit) std::printf("  [over %.0fs limit]", c.seconds_limit);
    if (!error.empty()) std::printf("  [error: %s]", error.c_str());
    std::printf("\n");
    for (const auto& r : rep.results)
      if (verbose || !r.passed)
        std::printf("      %s %s: %s\n", r.passed ? "ok  " : (r.notable ? "note" : "FAIL"), r.name.c_str(),
                    r.detail.c_str());
    std::fflush(stdout);
  }
  return failures ? 1 : 0;
}
