#pragma once

#include <string>

#include "baxter/errors.hpp"

namespace baxter {

// Caps for the exhaustive searches. These are configuration values; the CLI
// can override them from a config file or the BAXTER_LIMIT_N environment
// variable.
struct DeskLimits {
  int max_perm_n = 9;    // S_n enumeration (Baxter / twisted Baxter)
  int max_alt_len = 12;  // alternating Baxter permutation length
  int max_fiber_n = 8;   // congruence fiber closures
};

inline DeskLimits& desk_limits() {
  static DeskLimits limits;
  return limits;
}

inline void require_within(int value, int cap, const std::string& what) {
  if (value > cap) {
    fail(errc::limit_exceeded, what + " = " + std::to_string(value) +
                                   " exceeds the configured cap " +
                                   std::to_string(cap));
  }
}

}  // namespace baxter
