#pragma once

#include <string>
#include <vector>

#include "thom/registry.hpp"

namespace thom {

struct CheckResult {
  std::string table;
  std::string row;
  std::string method;  // solved, consistency, pipeline, identity
  bool passed = false;
  std::string got;
  std::string want;
  std::string detail;
};

const std::vector<std::string>& table_ids();  // "4".."11"

// Every row of one golden table; unknown ids throw UnknownName.
std::vector<CheckResult> verify_table(const std::string& table, const Registry& reg);

struct Arbitration {
  std::string solved;                // A3/Swallowtail Tp in cb form
  std::vector<std::string> matching;  // published rows equal to the solved Tp
  std::vector<std::string> rejected;
};
// Published forms of the A3 class (Table 4 and the stable-germ listing)
// against the solved (3,3) A3 and (2,2) Swallowtail.
Arbitration arbitrate_a3(const Registry& reg);

}  // namespace thom
