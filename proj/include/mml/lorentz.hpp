#pragma once

#include <Eigen/Core>

#include "mml/sl2.hpp"

namespace mml {

/// Affine isometry of Minkowski space R^{2,1}, signature (+,+,−).
///
/// Coordinates are taken in the basis
///   e₁ = [[1,0],[0,−1]], e₂ = [[0,1],[1,0]], e₃ = [[0,1],[−1,0]]
/// of sl(2,R), orthonormal for ⟨X,Y⟩ = ½·tr(XY) with e₃ timelike.
struct LorentzIsometry {
    Eigen::Matrix3d linear = Eigen::Matrix3d::Identity();
    Eigen::Vector3d translation = Eigen::Vector3d::Zero();
};

/// Lorentzian pairing u₁v₁ + u₂v₂ − u₃v₃.
double lorentz_dot(const Eigen::Vector3d& u, const Eigen::Vector3d& v);

/// J = diag(1, 1, −1).
Eigen::Matrix3d lorentz_gram();

/// Coordinates of a traceless 2×2 matrix in the basis above.
Eigen::Vector3d sl2_coords(const RealMatrix2& x);
RealMatrix2 sl2_from_coords(const Eigen::Vector3d& v);

/// linearᵀ·J·linear = J and det(linear) = 1, both to `tol`.
bool is_lorentz_isometry(const Eigen::Matrix3d& linear, double tol = 1e-10);

/// Ad(M₀) as a 3×3 Lorentz transformation, translation = coords of M₁M₀⁻¹.
LorentzIsometry adjoint_of(const DualMatrix2& m);

/// Semidirect product: (A, u)·(B, v) = (AB, u + A·v).
LorentzIsometry compose(const LorentzIsometry& g, const LorentzIsometry& h);

/// Unit spacelike fixed vector of a hyperbolic element of SO(2,1)₀.
///
/// Oriented so that det(e₃, A·e₃, x⁰) < 0; with this choice the
/// Margulis invariant below is the derivative of geodesic length.
/// Throws NotHyperbolic if the fixed space is not a single spacelike line.
Eigen::Vector3d neutral_vector(const Eigen::Matrix3d& linear, double tol = 1e-9);

/// Ratio between the Lorentzian displacement ⟨u, x⁰⟩ (½·tr normalization)
/// and the length derivative dℓ. The ½·tr form measures half the length.
inline constexpr double kTranslationScale = 2.0;

/// Margulis invariant kTranslationScale·⟨translation, x⁰(linear)⟩.
double margulis_invariant_lorentz(const LorentzIsometry& g, double tol = 1e-9);

} // namespace mml
