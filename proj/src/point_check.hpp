#pragma once

#include <cmath>

#include "mml/gap.hpp"
#include "mml/kernels.hpp"

namespace mml::detail {

struct PointViolations {
    bool gap, coeff_h, coeff_k;
};

inline PointViolations check_point(const GridPoint& p) {
    const auto [x, y, z] = p;
    const double hk = coeff_bound(y + z, x);
    return {std::abs(gap_D(x, y, z)) > gap_bound(x, y, z), !(std::abs(coeff_H(y + z, x)) < hk),
            !(std::abs(coeff_K(y + z, x)) < hk)};
}

} // namespace mml::detail
