#ifndef ROOTFOLD_CHECKS_HPP
#define ROOTFOLD_CHECKS_HPP

#include <string>
#include <vector>

namespace rootfold {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

const std::vector<std::string>& check_names();
CheckResult run_named_check(const std::string& name);  // UnknownCheck for bad names
std::vector<CheckResult> run_all_checks();

}  // namespace rootfold

#endif
