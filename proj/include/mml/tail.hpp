#pragma once

namespace mml {

/// Inflation applied to the fitted bin constant m̂ inside every tail bound.
inline constexpr double kBinSafety = 2.0;
/// Inflation applied to the observed κ̂ = max |α|/ℓ inside the derivative tail.
inline constexpr double kKappaSafety = 2.0;

enum class TailKind {
    identity,   ///< Σ D(ℓ∂, ℓ₁, ℓ₂), bin bound A_N
    cusp,       ///< Σ 2/(1 + e^{ℓ}) for a parabolic boundary
    derivative, ///< Σ d/dt D, bin bound M_N
};

struct TailInputs {
    double m_hat = 0;
    double kappa_hat = 0;
    double ell_boundary = 0;
    double alpha_boundary = 0;
};

/// Bound on the contribution of bin N (safety factors included):
///   identity:   4m·sinh(ℓ∂/2)·(N+1)²·e^{−N/2}
///   cusp:       2m·(N+1)²·e^{−N/2}
///   derivative: 4m·cosh(ℓ∂/2)·(2κN + |α∂|)·(N+1)²·e^{−N/2}
double tail_term(TailKind kind, int n, const TailInputs& in);

/// Σ_{N > n_max} tail_term(N).
double tail_bound(TailKind kind, int n_max, const TailInputs& in);

} // namespace mml
