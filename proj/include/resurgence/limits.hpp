#pragma once

#include <cstdint>

namespace resurgence {

// Hard caps that turn combinatorial blowups into deterministic failures.
struct ResourceLimits {
  // candidate monomials a single ideal operation may materialize
  std::int64_t generator_cap = 2'000'000;
  // nodes visited by staircase / box enumerations
  std::int64_t enum_node_cap = 10'000'000;
  // (m, r) pairs a finite search window may contain
  std::int64_t window_pair_cap = 200'000;
};

}  // namespace resurgence
