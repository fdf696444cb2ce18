#ifndef TQASM_TOOLS_CLI_HPP
#define TQASM_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace tqasm::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tqasm::cli

#endif  // TQASM_TOOLS_CLI_HPP
