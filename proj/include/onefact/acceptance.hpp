#pragma once

// The acceptance suite A1..A8, shared by the C API, the CLI selftest and the
// acceptance test binary. Thresholds and tolerances live in acceptance.cpp.

#include <functional>
#include <string>
#include <vector>

namespace onefact {

enum class Scale { Quick, Full };  // quick: A1..A5, full: A1..A8

struct CriterionResult {
  std::string id;  // "A1".."A8"
  bool pass = false;
  double seconds = 0;
  std::string detail;
};

using CriterionCallback = std::function<void(const CriterionResult &)>;

std::vector<CriterionResult> run_acceptance(Scale scale, const CriterionCallback &on_result = {});

/// One criterion by id. Errors: InvalidArgument.
CriterionResult run_criterion(const std::string &id);

/// "A1 PASS 0.42s <detail>"
std::string format_result(const CriterionResult &r);

} // namespace onefact
