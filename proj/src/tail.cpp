#include "mml/tail.hpp"

#include <cmath>

namespace mml {

double tail_term(TailKind kind, int n, const TailInputs& in) {
    const double m = kBinSafety * in.m_hat;
    const double nn = static_cast<double>(n);
    const double count_decay = (nn + 1.0) * (nn + 1.0) * std::exp(-nn / 2.0);
    switch (kind) {
    case TailKind::identity:
        return 4.0 * m * std::sinh(in.ell_boundary / 2.0) * count_decay;
    case TailKind::cusp:
        return 2.0 * m * count_decay;
    case TailKind::derivative: {
        const double kappa = kKappaSafety * in.kappa_hat;
        return 4.0 * m * std::cosh(in.ell_boundary / 2.0) *
               (2.0 * kappa * nn + std::abs(in.alpha_boundary)) * count_decay;
    }
    }
    return 0.0;
}

double tail_bound(TailKind kind, int n_max, const TailInputs& in) {
    // Terms are polynomial × e^{−N/2}: eventually decreasing, so stop once a
    // decreasing term no longer moves the sum.
    double sum = 0.0;
    double prev = INFINITY;
    for (int n = n_max + 1; n < n_max + 20000; ++n) {
        const double term = tail_term(kind, n, in);
        sum += term;
        if (term <= prev && term <= sum * 1e-18) break;
        prev = term;
    }
    return sum;
}

} // namespace mml
