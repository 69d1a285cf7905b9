#pragma once

#include <algorithm>

namespace asq {

// Single global knob for floating-point verification thresholds.
// Default scales mildly with the working dimension: eps = 1e-8 * max(1, D).
struct Tolerance {
    double eps = 1e-8;
};

inline Tolerance default_tolerance(int dim) {
    return Tolerance{1e-8 * static_cast<double>(std::max(1, dim))};
}

}  // namespace asq
