#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rmc {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  long cases = 0;
  std::string detail;  // first failure or exception text
};

const std::vector<std::string>& suite_names();
// "all" runs every suite. Throws InvalidArgument for an unknown name.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed, int workers);

}  // namespace rmc
