#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iostream>

#include "ddalab/acceptance.hpp"
#include "ddalab/pipelines.hpp"

using namespace ddalab;

int main(int argc, char** argv) {
  AcceptanceOptions opts;
  opts.threads = default_threads();
  bool verbose = false;
  for (int k = 1; k < argc; ++k)
    if (std::strcmp(argv[k], "--verbose") == 0) verbose = true;
  auto start = std::chrono::steady_clock::now();
  std::vector<CriterionResult> results = run_acceptance(opts);
  int failed = 0;
  for (const auto& r : results) {
    bool ok = r.passed();
    failed += !ok;
    std::cout << "criterion " << r.number << ": " << (ok ? "PASS" : "FAIL") << "  " << r.title << " ("
              << r.report.checks().size() << " checks)\n";
    for (const auto& c : r.report.sorted())
      if (!c.holds || verbose)
        std::cout << "    " << (c.holds ? "ok   " : "FAIL ") << c.id << (c.witness.empty() ? "" : ": " + c.witness)
                  << (verbose && !c.detail.empty() ? "  [" + c.detail + "]" : "")
                  << "\n";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed in " << secs << " s\n";
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
