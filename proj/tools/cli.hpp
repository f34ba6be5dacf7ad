#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thomcli {

enum Exit : int {
  kOk = 0,
  kMismatch = 1,     // verify row or golden comparison failed
  kSolverError = 2,  // not solvable, modulus direction, inconsistent, empty locus
  kUnknownName = 3,  // type, pipeline or table
  kBadInput = 4,     // malformed characters, registry parse or validation failure
  kUsage = 5,        // command-line syntax
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thomcli
