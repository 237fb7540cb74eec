#ifndef HIGGSMOT_TOOLS_APP_HPP
#define HIGGSMOT_TOOLS_APP_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace higgsmot::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kResource = 3 };

// One identity of a verification suite.
struct Check {
  std::string suite;
  std::string description;
  std::function<bool()> run;
};

// The checks behind `verify --suite <name>` for one genus; "all" expands to
// every suite.
std::vector<Check> suite_checks(const std::string& suite, int genus);
const std::vector<std::string>& suite_names();

// Runs the command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace higgsmot::cli

#endif  // HIGGSMOT_TOOLS_APP_HPP
