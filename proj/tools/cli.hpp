#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace thermal_sense::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDataError = 2,
  kTrainingFailure = 3,
};

// Entry point shared by main() and the tests. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace thermal_sense::cli
