#pragma once

#include <string>
#include <vector>

#include "ddalab/report.hpp"
#include "ddalab/scalar.hpp"

namespace ddalab {

struct CriterionResult {
  int number = 0;
  std::string title;
  Report report;
  bool passed() const { return report.ok() && !report.checks().empty(); }
};

struct AcceptanceOptions {
  Field field = Field::rationals();  // main field; the prime-field variants of criteria 1 and 2 always run
  std::size_t threads = 1;
};

// The ten acceptance criteria on the bundled instances, in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

}  // namespace ddalab
