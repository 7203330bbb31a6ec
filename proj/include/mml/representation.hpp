#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "mml/slope.hpp"
#include "mml/sl2.hpp"

namespace mml {

/// Traces of A, B and AB; coordinates on the holed-torus character variety.
struct TraceCoords {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Fricke polynomial x² + y² + z² − xyz − 2 = tr[A,B], over any commutative ring.
template <class T>
constexpr T fricke_boundary_trace(T x, T y, T z) {
    return x * x + y * y + z * z - x * y * z - T(2.0);
}

inline double fricke_boundary_trace(const TraceCoords& c) {
    return fricke_boundary_trace<double>(c.x, c.y, c.z);
}

/// |tr[A,B] + 2| below this is treated as a cusp (parabolic boundary).
inline constexpr double kCuspTol = 1e-9;

/// Marked one-holed-torus representation with an affine deformation attached.
struct HoledTorusRep {
    DualMatrix2 a = DualMatrix2::identity();
    DualMatrix2 b = DualMatrix2::identity();
    DualMatrix2 boundary = DualMatrix2::identity(); ///< [A, B]
    TraceCoords coords;
    std::string deformation_label = "zero";

    bool cusped() const { return std::abs(boundary.trace().re + 2.0) <= kCuspTol; }
};

/// Build A = diag(λ, 1/λ), B with unit determinant, matching the coordinates.
/// Requires x > 2; other coordinates are checked by validate_fuchsian.
HoledTorusRep build_rep(const TraceCoords& c);

struct ValidationReport {
    bool ok = true;
    std::string reason;            ///< empty when ok; otherwise a short tag
    std::optional<Slope> offending; ///< first non-hyperbolic curve, if any
};

/// Checks coordinates > 2, boundary trace < −2 and |trace| > 2 on all curves
/// up to Stern–Brocot depth `sample_depth`.
ValidationReport validate_fuchsian(const HoledTorusRep& rep, int sample_depth = 8);

struct ZeroDeformation {};

/// Affine path c(t) = c(0) + t·direction in trace coordinates,
/// differentiated by central differences with step h.
struct PathDeformation {
    std::array<double, 3> direction{1.0, 1.0, 1.0};
    double h = 1e-4;
};

/// Explicit ε-parts of the generators.
struct TangentDeformation {
    RealMatrix2 a1;
    RealMatrix2 b1;
};

using DeformationSpec = std::variant<ZeroDeformation, PathDeformation, TangentDeformation>;

/// Returns `rep` with ε-parts set by `d` and the boundary recomputed over R[ε].
HoledTorusRep attach_deformation(const HoledTorusRep& rep, const DeformationSpec& d);

/// Tangent deformation A₁ = A₀·X, B₁ = B₀·Y with X, Y ∈ sl(2) drawn uniformly
/// from [−scale, scale] in the e₁, e₂, e₃ coordinates.
TangentDeformation random_tangent(const HoledTorusRep& rep, std::uint64_t seed, double scale = 1.0);

} // namespace mml
