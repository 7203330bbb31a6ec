#pragma once
// Independent reference computations and random generators shared by the tests.

#include <cmath>
#include <cstdint>
#include <random>

#include "mml/sl2.hpp"

namespace oracle {

using mml::DualMatrix2;
using mml::RealMatrix2;

// Values below were evaluated with mpmath at 30 significant digits.
inline constexpr double kLengthTrace3 = 1.92484730023841378999;   // 2·arccosh(3/2)
inline constexpr double kLengthTrace4 = 2.63391579384963341725;   // 2·arccosh(2)
inline constexpr double kBoundary444 = 5.77454190071524136997;    // 2·arccosh(9)
inline constexpr double kPathAlpha444 = 2.68328157299974763569;   // 48/√320
inline constexpr double kGapD211 = 1.13243833903394562595;        // D(2, 1, 1)
inline constexpr double kCoeffH20 = 0.537882842739990241498;      // 2/(1 + e)

// Gap function straight from its definition, without the log1p rewrite.
inline double gap_D_naive(double x, double y, double z) {
    const double s = (y + z) / 2.0;
    return 2.0 * std::log((std::exp(x / 2.0) + std::exp(s)) / (std::exp(-x / 2.0) + std::exp(s)));
}

template <class F>
double central_difference(F f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
    std::mt19937_64& engine() { return gen_; }

    // Unit-determinant matrix with entries of moderate size.
    RealMatrix2 sl2() {
        while (true) {
            const double a = uniform(-2.0, 2.0), b = uniform(-2.0, 2.0), c = uniform(-2.0, 2.0);
            if (std::abs(a) < 0.3) continue;
            return {a, b, c, (1.0 + b * c) / a};
        }
    }

    // Unit-determinant matrix with min_trace < |tr| < max_trace.
    RealMatrix2 hyperbolic(double min_trace = 2.5, double max_trace = 30.0) {
        while (true) {
            const RealMatrix2 m = sl2();
            const double t = std::abs(m.trace());
            if (t > min_trace && t < max_trace) return m;
        }
    }

    // Traceless matrix with coordinates in [−scale, scale].
    RealMatrix2 sl2_algebra(double scale = 1.0) {
        const double p = uniform(-scale, scale), q = uniform(-scale, scale), r = uniform(-scale, scale);
        return {p, q + r, q - r, -p};
    }

    // M₀ + ε·M₀X with X traceless: a group element of SL(2, R[ε]).
    DualMatrix2 group_element(const RealMatrix2& value) { return mml::lift(value, value * sl2_algebra()); }

private:
    std::mt19937_64 gen_;
};

// diag(e^{(ℓ + εs)/2}, e^{−(ℓ + εs)/2}).
inline DualMatrix2 diagonal_rate(double ell, double s) {
    const double e = std::exp(ell / 2.0);
    return mml::lift({e, 0.0, 0.0, 1.0 / e}, {0.5 * s * e, 0.0, 0.0, -0.5 * s / e});
}

// Exact group path t ↦ M₀·(I + tX)/√det(I + tX).
inline RealMatrix2 path_point(const RealMatrix2& value, const RealMatrix2& x, double t) {
    const RealMatrix2 step = RealMatrix2::identity() + t * x;
    return (1.0 / std::sqrt(step.det())) * (value * step);
}

} // namespace oracle
