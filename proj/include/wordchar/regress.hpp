#pragma once

#include <functional>
#include <string>
#include <vector>

namespace wordchar {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// The golden acceptance suite. Runs the requested criteria (1..10, empty
/// selection means all) and reports one result per criterion. `log` gets a
/// line per criterion as it finishes.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& select = {},
                                            const std::function<void(const std::string&)>& log = {});

}  // namespace wordchar
