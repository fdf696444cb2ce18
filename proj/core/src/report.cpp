#include "tqasm/report.hpp"

#include <algorithm>

namespace tqasm {

const char* to_string(CheckMode mode) { return mode == CheckMode::Exact ? "exact" : "numeric"; }

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
}

}  // namespace tqasm
