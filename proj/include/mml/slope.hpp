#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>

#include "mml/errors.hpp"

namespace mml {

/// Slope p/q of a simple closed curve on the one-holed torus.
///
/// Canonical form: gcd(|p|, q) = 1 and q > 0, or (p, q) = (1, 0).
/// p counts the generator a, q counts b.
struct Slope {
    std::int64_t p = 1;
    std::int64_t q = 0;

    friend constexpr auto operator<=>(const Slope&, const Slope&) = default;
};

/// Reduce to canonical form; throws InputError for 0/0.
inline Slope canonical(std::int64_t p, std::int64_t q) {
    if (p == 0 && q == 0) throw InputError("0/0 is not a slope");
    const std::int64_t g = std::gcd(p, q);
    p /= g;
    q /= g;
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
    return {p, q};
}

inline bool is_canonical(const Slope& s) {
    if (s.q == 0) return s.p == 1;
    return s.q > 0 && std::gcd(s.p, s.q) == 1;
}

inline std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.p << '/' << s.q; }

} // namespace mml
