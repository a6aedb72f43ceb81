#pragma once

#include <atomic>
#include <cstdlib>
#include <string>

#include "matroid/error.hpp"

namespace matroid {

inline constexpr int default_exhaustive_cap = 20;

namespace detail {
inline std::atomic<int>& cap_storage() {
  static std::atomic<int> cap = [] {
    if (const char* env = std::getenv("MATROID_CAP")) {
      try {
        int v = std::stoi(env);
        if (v > 0 && v <= 64) return v;
      } catch (...) {
      }
    }
    return default_exhaustive_cap;
  }();
  return cap;
}
}  // namespace detail

/// Largest ground set on which 2^E sweeps are allowed. Defaults to 20 and may be
/// overridden by the MATROID_CAP environment variable or set_exhaustive_cap.
inline int exhaustive_cap() { return detail::cap_storage().load(); }

inline void set_exhaustive_cap(int cap) {
  if (cap <= 0 || cap > 64) fail(ErrorCode::BoundsViolation, "cap must be in 1..64");
  detail::cap_storage().store(cap);
}

inline void require_exhaustive(int n, const char* what) {
  if (n > exhaustive_cap())
    fail(ErrorCode::CapExceeded, std::string(what) + " needs 2^" + std::to_string(n) +
                                     " subsets; exhaustive cap is " +
                                     std::to_string(exhaustive_cap()));
}

}  // namespace matroid
