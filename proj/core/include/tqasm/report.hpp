#ifndef TQASM_REPORT_HPP
#define TQASM_REPORT_HPP

#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace tqasm {

enum class CheckMode { Exact, Numeric };

/// Outcome of one named verification.
struct VerificationReport {
  std::string check;
  std::string parameters;  // e.g. "M=5" or "N=11"
  bool passed = false;
  CheckMode mode = CheckMode::Exact;
  /// Residual, counterexample or summary values, in display order.
  std::vector<std::pair<std::string, std::string>> payload;
  double wall_ms = 0.0;

  void add(std::string key, std::string value) { payload.emplace_back(std::move(key), std::move(value)); }
  /// Records a sub-failure and marks the report failed.
  void fail(std::string key, std::string value) {
    passed = false;
    add(std::move(key), std::move(value));
  }
};

const char* to_string(CheckMode mode);

/// Runs `body` (which fills and returns a report) and stamps wall time.
/// Exceptions from the body become a failed report carrying the message,
/// so an exact check that raised is never reported as passing.
template <class Fn>
VerificationReport timed_check(std::string check, std::string parameters, CheckMode mode, Fn&& body) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  try {
    report = body();
  } catch (const std::exception& e) {
    report = VerificationReport{};
    report.passed = false;
    report.add("error", e.what());
  }
  report.check = std::move(check);
  report.parameters = std::move(parameters);
  report.mode = mode;
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace tqasm

#endif  // TQASM_REPORT_HPP
