#pragma once

#include <cmath>
#include <ostream>

#include "mml/errors.hpp"

namespace mml {

/// Real-part magnitude below which a dual scalar is treated as a zero divisor.
inline constexpr double kZeroDivisorTol = 1e-300;

/// Element re + ε·inf of the dual numbers R[ε], ε² = 0.
///
/// The ε part carries a first-order deformation of the value: evaluating a
/// polynomial expression on (x + ε·dx) yields (f(x) + ε·f'(x)dx).
struct Dual {
    double re = 0.0;
    double inf = 0.0;

    constexpr Dual() = default;
    constexpr Dual(double value) : re(value) {} // NOLINT: implicit lift R -> R[ε]
    constexpr Dual(double value, double eps) : re(value), inf(eps) {}

    constexpr Dual& operator+=(Dual o) {
        re += o.re;
        inf += o.inf;
        return *this;
    }
    constexpr Dual& operator-=(Dual o) {
        re -= o.re;
        inf -= o.inf;
        return *this;
    }
    constexpr Dual& operator*=(Dual o) {
        inf = re * o.inf + inf * o.re;
        re *= o.re;
        return *this;
    }

    friend constexpr bool operator==(Dual, Dual) = default;
};

constexpr Dual operator-(Dual x) { return {-x.re, -x.inf}; }
constexpr Dual operator+(Dual x, Dual y) { return x += y; }
constexpr Dual operator-(Dual x, Dual y) { return x -= y; }
constexpr Dual operator*(Dual x, Dual y) { return x *= y; }

/// Multiplicative inverse; throws ZeroDivisor when |re| < zero_tol.
inline Dual inverse(Dual x, double zero_tol = kZeroDivisorTol) {
    if (!(std::abs(x.re) >= zero_tol)) {
        throw ZeroDivisor("dual scalar with zero real part is not invertible");
    }
    const double r = 1.0 / x.re;
    return {r, -x.inf * r * r};
}

inline Dual operator/(Dual x, Dual y) { return x * inverse(y); }

inline std::ostream& operator<<(std::ostream& os, Dual x) {
    return os << x.re << (x.inf < 0 ? " - " : " + ") << std::abs(x.inf) << "ε";
}

} // namespace mml
