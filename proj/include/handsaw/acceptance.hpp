#pragma once

#include <string>
#include <vector>

namespace handsaw {

struct AcceptanceOptions {
  bool quick = false;
  int workers = 1;
  unsigned seed = 987654321u;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;
  bool pass = true;
};

// Runs the ten acceptance criteria (reduced grids under quick). All
// comparisons are exact integer/polynomial equality; the only tolerance
// anywhere is the wall-clock budget, which is not part of pass/fail.
AcceptanceReport run_acceptance(const AcceptanceOptions& options);

// One line per criterion plus an overall verdict; deterministic bytes for a
// fixed (quick, seed) regardless of worker count.
std::string format_report(const AcceptanceReport& report);

}  // namespace handsaw
