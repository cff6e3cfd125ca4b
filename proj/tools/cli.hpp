#ifndef REESTYPE_TOOLS_CLI_HPP
#define REESTYPE_TOOLS_CLI_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace reestype::cli {

// exit codes: 0 ok, 2 parse error, 3 precondition failure, 4 degree-cap abort
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitDegreeCap = 4;

struct RunResult {
  int exit_code = 0;
  nlohmann::ordered_json report;
};

/// Execute one subcommand invocation (argv without the program name).
RunResult run(const std::vector<std::string>& args);

/// Full entry point: runs, prints the JSON report to stdout, returns the
/// exit code.
int main_entry(int argc, char** argv);

}  // namespace reestype::cli

#endif
