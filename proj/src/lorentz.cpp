#include "mml/lorentz.hpp"

#include <Eigen/Geometry>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <array>
#include <cmath>

namespace mml {

double lorentz_dot(const Eigen::Vector3d& u, const Eigen::Vector3d& v) {
    return u[0] * v[0] + u[1] * v[1] - u[2] * v[2];
}

Eigen::Matrix3d lorentz_gram() { return Eigen::Vector3d(1.0, 1.0, -1.0).asDiagonal(); }

Eigen::Vector3d sl2_coords(const RealMatrix2& x) {
    return {(x.a - x.d) / 2.0, (x.b + x.c) / 2.0, (x.b - x.c) / 2.0};
}

RealMatrix2 sl2_from_coords(const Eigen::Vector3d& v) {
    return {v[0], v[1] + v[2], v[1] - v[2], -v[0]};
}

bool is_lorentz_isometry(const Eigen::Matrix3d& linear, double tol) {
    const Eigen::Matrix3d j = lorentz_gram();
    const double defect = (linear.transpose() * j * linear - j).cwiseAbs().maxCoeff();
    return defect <= tol && std::abs(linear.determinant() - 1.0) <= tol;
}

LorentzIsometry adjoint_of(const DualMatrix2& m) {
    const RealMatrix2 m0 = value_part(m);
    const RealMatrix2 m0_inv = m0.adjugate();
    LorentzIsometry g;
    for (int i = 0; i < 3; ++i) {
        const RealMatrix2 basis = sl2_from_coords(Eigen::Vector3d::Unit(i));
        g.linear.col(i) = sl2_coords(m0 * basis * m0_inv);
    }
    g.translation = sl2_coords(tangent_part(m) * m0_inv);
    return g;
}

LorentzIsometry compose(const LorentzIsometry& g, const LorentzIsometry& h) {
    return {g.linear * h.linear, g.translation + g.linear * h.translation};
}

Eigen::Vector3d neutral_vector(const Eigen::Matrix3d& linear, double tol) {
    // Eigenvalues of a hyperbolic element are λ, 1, 1/λ, so tr = 1 + 2cosh(ℓ) > 3.
    if (!(linear.trace() > 3.0 + tol)) {
        throw NotHyperbolic("linear part is not hyperbolic (trace <= 3)");
    }
    const Eigen::Matrix3d shifted = linear - Eigen::Matrix3d::Identity();

    // Kernel of (A − I) from the best-conditioned cross product of two rows.
    constexpr std::array<std::array<int, 2>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    Eigen::Vector3d fixed = Eigen::Vector3d::Zero();
    double best = -1.0;
    for (const auto& [i, j] : pairs) {
        const Eigen::Vector3d ri = shifted.row(i);
        const Eigen::Vector3d rj = shifted.row(j);
        const Eigen::Vector3d cross = ri.cross(rj);
        const double scale = ri.norm() * rj.norm();
        const double quality = scale > 0.0 ? cross.norm() / scale : 0.0;
        if (quality > best) {
            best = quality;
            fixed = cross;
        }
    }
    if (best < 1e-8) {
        Eigen::JacobiSVD<Eigen::Matrix3d> svd(shifted, Eigen::ComputeFullV);
        fixed = svd.matrixV().col(2);
    }

    const double norm2 = lorentz_dot(fixed, fixed);
    if (!(norm2 > tol * fixed.squaredNorm())) {
        throw NotHyperbolic("fixed line of linear part is not spacelike");
    }
    fixed /= std::sqrt(norm2);

    Eigen::Matrix3d frame;
    frame.row(0) = Eigen::Vector3d::UnitZ();
    frame.row(1) = linear.col(2);
    frame.row(2) = fixed;
    if (frame.determinant() > 0.0) fixed = -fixed;
    return fixed;
}

double margulis_invariant_lorentz(const LorentzIsometry& g, double tol) {
    return kTranslationScale * lorentz_dot(g.translation, neutral_vector(g.linear, tol));
}

} // namespace mml
