#pragma once

namespace mml {

/// 1 / (1 + e^a), evaluated without overflow.
double logistic_tail(double a);

/// Gap function D(x, y, z) = 2·log((e^{x/2} + e^{(y+z)/2}) / (e^{−x/2} + e^{(y+z)/2})),
/// evaluated as 2·log1p(2·sinh(x/2)·e^{−(y+z)/2} / (1 + e^{−(x+y+z)/2})).
double gap_D(double x, double y, double z);

/// H(u, v) = 1/(1 + e^{(u+v)/2}) + 1/(1 + e^{(u−v)/2}).
double coeff_H(double u, double v);

/// K(u, v) = −sinh(v/2) / (cosh(u/2) + cosh(v/2)).
double coeff_K(double u, double v);

/// K(u, v) in difference form 1/(1 + e^{(u+v)/2}) − 1/(1 + e^{(u−v)/2}).
double coeff_K_difference(double u, double v);

/// ∂H/∂v, evaluated from the two logistic terms.
double coeff_H_dv(double u, double v);

/// d/dt D(ℓ∂, ℓ₁, ℓ₂) = H(ℓ₁+ℓ₂, ℓ∂)·α∂ + K(ℓ₁+ℓ₂, ℓ∂)·(α₁ + α₂).
double term_derivative(double ell1, double ell2, double ell_boundary, double alpha1, double alpha2,
                       double alpha_boundary);

/// Summand for a cusped boundary: lim_{x→0} D(x, ℓ₁, ℓ₂)/x = 2/(1 + e^{(ℓ₁+ℓ₂)/2}).
double cusp_gap(double ell1, double ell2);

/// Majorant 4·sinh(x/2)·e^{−(y+z)/2} of |D(x, y, z)|.
double gap_bound(double x, double y, double z);

/// Majorant 2·cosh(|v|/2)·e^{−u/2} of |H(u, v)| and |K(u, v)|.
double coeff_bound(double u, double v);

} // namespace mml
