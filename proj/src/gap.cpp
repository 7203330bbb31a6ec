#include "mml/gap.hpp"

#include <cmath>

namespace mml {

double logistic_tail(double a) {
    if (a > 0.0) {
        const double e = std::exp(-a);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(a));
}

double gap_D(double x, double y, double z) {
    const double s = y + z;
    const double u = 2.0 * std::sinh(x / 2.0) * std::exp(-s / 2.0) / (1.0 + std::exp(-(x + s) / 2.0));
    return 2.0 * std::log1p(u);
}

double coeff_H(double u, double v) {
    return logistic_tail((u + v) / 2.0) + logistic_tail((u - v) / 2.0);
}

double coeff_K(double u, double v) {
    return -std::sinh(v / 2.0) / (std::cosh(u / 2.0) + std::cosh(v / 2.0));
}

double coeff_K_difference(double u, double v) {
    return logistic_tail((u + v) / 2.0) - logistic_tail((u - v) / 2.0);
}

double coeff_H_dv(double u, double v) {
    // d/da 1/(1+e^a) = −σ(a)(1−σ(a)) with σ(a) = 1/(1+e^{−a}).
    auto slope = [](double a) {
        const double p = logistic_tail(a);
        return p * (1.0 - p);
    };
    return 0.5 * (slope((u - v) / 2.0) - slope((u + v) / 2.0));
}

double term_derivative(double ell1, double ell2, double ell_boundary, double alpha1, double alpha2,
                       double alpha_boundary) {
    const double u = ell1 + ell2;
    return coeff_H(u, ell_boundary) * alpha_boundary + coeff_K(u, ell_boundary) * (alpha1 + alpha2);
}

double cusp_gap(double ell1, double ell2) { return coeff_H(ell1 + ell2, 0.0); }

double gap_bound(double x, double y, double z) {
    return 4.0 * std::sinh(x / 2.0) * std::exp(-(y + z) / 2.0);
}

double coeff_bound(double u, double v) {
    return 2.0 * std::cosh(std::abs(v) / 2.0) * std::exp(-u / 2.0);
}

} // namespace mml
