#pragma once

#include <cstdlib>
#include <string>

#include "errors.hpp"

namespace mbp {

// Face and flag enumeration scan all 2^n subsets, so ground sets are capped.
// The default cap of 12 keeps every basis family at or below C(12,6) = 924 sets.
// MATROID_MAX_N overrides it (hard limit 31, one bit per element).
inline int& ground_set_cap() {
    static int cap = [] {
        if (const char* env = std::getenv("MATROID_MAX_N")) {
            int v = std::atoi(env);
            if (v >= 1 && v <= 31) return v;
        }
        return 12;
    }();
    return cap;
}

inline void require_within_cap(int n, const char* what) {
    if (n < 0 || n > 31)
        fail(ErrorKind::BadParameters, std::string(what) + ": ground set size " + std::to_string(n));
    if (n > ground_set_cap())
        fail(ErrorKind::GroundSetTooLarge,
             std::string(what) + ": ground set size " + std::to_string(n) + " exceeds cap " +
                 std::to_string(ground_set_cap()) + " (set MATROID_MAX_N to raise it)");
}

}  // namespace mbp
