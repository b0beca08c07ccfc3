#include <iostream>
#include <string>

#include "handsaw/acceptance.hpp"
#include "handsaw/parallel.hpp"

// Runs the ten acceptance criteria and prints one PASS/FAIL line per
// criterion. Exit 0 iff everything passed.
int main(int argc, char** argv) {
  handsaw::AcceptanceOptions options;
  options.workers = handsaw::default_workers();
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--quick") {
      options.quick = true;
    } else if (arg == "--workers" && i + 1 < argc) {
      options.workers = std::stoi(argv[++i]);
    } else if (arg == "--seed" && i + 1 < argc) {
      options.seed = static_cast<unsigned>(std::stoul(argv[++i]));
    } else {
      std::cerr << "usage: acceptance_tests [--quick] [--workers N] [--seed S]\n";
      return 2;
    }
  }
  handsaw::AcceptanceReport report = handsaw::run_acceptance(options);
  std::cout << handsaw::format_report(report);
  return report.pass ? 0 : 1;
}
