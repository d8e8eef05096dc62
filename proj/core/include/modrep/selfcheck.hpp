#pragma once

// Property suite over every module, run by `modrep selftest`.

#include <cstdint>
#include <string>
#include <vector>

namespace modrep {

struct CheckResult {
  std::string module;
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CheckResult> run_selfcheck(std::uint64_t seed, unsigned jobs = 1);

}  // namespace modrep
