#pragma once

#include <string>
#include <vector>

namespace arrangio {

// One acceptance criterion: a batch of exact clauses over the built-in
// fixtures and randomized instances. details carries one line per clause
// group, including the exact values behind any failure.
struct CriterionResult {
  int number = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;
  bool all_passed() const;
};

// Runs the acceptance battery with fixed seeds (fully deterministic).
// filter, when non-empty, keeps criteria whose number or title contains
// it as a substring.
AcceptanceReport run_acceptance(const std::string& filter);

}  // namespace arrangio
