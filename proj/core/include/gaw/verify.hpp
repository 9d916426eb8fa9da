#pragma once

#include "gaw/scenario.hpp"
#include "gaw/table.hpp"

#include <string>
#include <vector>

namespace gaw {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  double max_deviation = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_passed() const;
};

// Fixed cross-solver and identity suites with deterministic seeds.
VerifyReport run_verify();

// Fixed suites plus flux conservation over the given scenario.
VerifyReport run_verify(const ScenarioConfig& config);

DataTable to_table(const VerifyReport& report);

}  // namespace gaw
