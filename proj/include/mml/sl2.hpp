#pragma once

#include "mml/dual.hpp"

namespace mml {

/// Row-major 2×2 matrix [[a, b], [c, d]] over a commutative ring T.
template <class T>
struct Mat2 {
    T a{}, b{}, c{}, d{};

    static constexpr Mat2 identity() { return {T(1.0), T(0.0), T(0.0), T(1.0)}; }

    constexpr T trace() const { return a + d; }
    constexpr T det() const { return a * d - b * c; }

    /// Adjugate; equals the inverse whenever det = 1.
    constexpr Mat2 adjugate() const { return {d, -b, -c, a}; }

    friend constexpr Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend constexpr Mat2 operator+(const Mat2& m, const Mat2& n) {
        return {m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d};
    }
    friend constexpr Mat2 operator-(const Mat2& m, const Mat2& n) {
        return {m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d};
    }
    friend constexpr Mat2 operator*(T s, const Mat2& m) {
        return {s * m.a, s * m.b, s * m.c, s * m.d};
    }
    friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

using RealMatrix2 = Mat2<double>;

/// Element of SL(2, R[ε]) = T·SL(2, R): value part M₀ plus ε-part M₁.
using DualMatrix2 = Mat2<Dual>;

/// Tolerance for det = 1 + 0ε group membership.
inline constexpr double kGroupTol = 1e-10;

/// Assemble M₀ + εM₁.
DualMatrix2 lift(const RealMatrix2& value, const RealMatrix2& tangent = {});
RealMatrix2 value_part(const DualMatrix2& m);
RealMatrix2 tangent_part(const DualMatrix2& m);

/// det(M) = 1 + 0ε within `tol` in each part.
bool in_group(const DualMatrix2& m, double tol = kGroupTol);

/// As `lift`, but throws InvalidCoords if the result is not a group element.
DualMatrix2 make_group_element(const RealMatrix2& value, const RealMatrix2& tangent = {},
                               double tol = kGroupTol);

/// Pulls a drifted matrix back onto the group: rescales M₀ to unit determinant
/// and projects M₁ onto the tangent condition tr(M₀⁻¹M₁) = 0.
DualMatrix2 normalized(const DualMatrix2& m);

/// Removes the component of `tangent` violating tr(value⁻¹·tangent) = 0.
RealMatrix2 project_tangent(const RealMatrix2& value, const RealMatrix2& tangent);

inline DualMatrix2 compose(const DualMatrix2& m, const DualMatrix2& n) { return m * n; }
inline DualMatrix2 inverse(const DualMatrix2& m) { return m.adjugate(); }
inline Dual dual_trace(const DualMatrix2& m) { return m.trace(); }

/// A·B·A⁻¹·B⁻¹.
DualMatrix2 commutator(const DualMatrix2& a, const DualMatrix2& b);

/// mⁿ for n ≥ 0; negative n uses the inverse.
DualMatrix2 power(const DualMatrix2& m, int n);

/// Hyperbolic translation length 2·arccosh(|t|/2). Throws NotHyperbolic if |t| ≤ 2 + tol.
double translation_length(double trace, double tol = 0.0);

/// Margulis invariant from a dual trace t + ε·t_ε: the ε-derivative of
/// 2·arccosh(|t|/2), i.e. 2·sign(t)·t_ε / √(t² − 4).
double margulis_from_trace(Dual trace, double tol = 0.0);

/// Dual-trace Margulis invariant of a group element.
inline double margulis_invariant_dual(const DualMatrix2& m, double tol = 0.0) {
    return margulis_from_trace(dual_trace(m), tol);
}

} // namespace mml
