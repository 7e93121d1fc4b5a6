#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace symcap {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

// Invariant suite of one module: core, capacities, weyl, packing, coloring, rotcheck, billiard, cex.
std::vector<CheckResult> selftest(std::string_view module, std::uint64_t seed);

}  // namespace symcap
