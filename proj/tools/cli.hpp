#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flagcsm::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kShape = 3,
  kInvariant = 4,
  kConjecture = 5,
};

// Runs one subcommand; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagcsm::cli
