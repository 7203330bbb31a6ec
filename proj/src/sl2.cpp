#include "mml/sl2.hpp"

#include <cmath>
#include <sstream>

namespace mml {

DualMatrix2 lift(const RealMatrix2& value, const RealMatrix2& tangent) {
    return {{value.a, tangent.a}, {value.b, tangent.b}, {value.c, tangent.c}, {value.d, tangent.d}};
}

RealMatrix2 value_part(const DualMatrix2& m) { return {m.a.re, m.b.re, m.c.re, m.d.re}; }

RealMatrix2 tangent_part(const DualMatrix2& m) { return {m.a.inf, m.b.inf, m.c.inf, m.d.inf}; }

bool in_group(const DualMatrix2& m, double tol) {
    const Dual det = m.det();
    return std::abs(det.re - 1.0) <= tol && std::abs(det.inf) <= tol;
}

DualMatrix2 make_group_element(const RealMatrix2& value, const RealMatrix2& tangent, double tol) {
    DualMatrix2 m = lift(value, tangent);
    if (!in_group(m, tol)) {
        std::ostringstream msg;
        msg << "matrix is not in SL(2, R[eps]): det = " << m.det();
        throw InvalidCoords(msg.str());
    }
    return m;
}

RealMatrix2 project_tangent(const RealMatrix2& value, const RealMatrix2& tangent) {
    // d/dε det(M₀ + εM₁) = tr(adj(M₀)·M₁); subtracting ½·that·M₀ zeroes it when det M₀ = 1.
    const double drift = (value.adjugate() * tangent).trace() / value.det();
    return tangent - (0.5 * drift) * value;
}

DualMatrix2 normalized(const DualMatrix2& m) {
    RealMatrix2 value = value_part(m);
    const double det = value.det();
    if (!(det > 0.0)) {
        throw InvalidCoords("cannot normalize a matrix with non-positive determinant");
    }
    const double scale = 1.0 / std::sqrt(det);
    value = scale * value;
    return lift(value, project_tangent(value, scale * tangent_part(m)));
}

DualMatrix2 commutator(const DualMatrix2& a, const DualMatrix2& b) {
    return a * b * inverse(a) * inverse(b);
}

DualMatrix2 power(const DualMatrix2& m, int n) {
    DualMatrix2 base = n < 0 ? inverse(m) : m;
    unsigned k = n < 0 ? static_cast<unsigned>(-n) : static_cast<unsigned>(n);
    DualMatrix2 out = DualMatrix2::identity();
    while (k != 0) {
        if (k & 1U) out = out * base;
        base = base * base;
        k >>= 1U;
    }
    return out;
}

namespace {

void require_hyperbolic(double trace, double tol) {
    if (!(std::abs(trace) > 2.0 + tol)) {
        std::ostringstream msg;
        msg << "trace " << trace << " is not hyperbolic (|t| <= 2)";
        throw NotHyperbolic(msg.str());
    }
}

} // namespace

double translation_length(double trace, double tol) {
    require_hyperbolic(trace, tol);
    return 2.0 * std::acosh(std::abs(trace) / 2.0);
}

double margulis_from_trace(Dual trace, double tol) {
    require_hyperbolic(trace.re, tol);
    const double t = trace.re;
    // √(t²−4) written as √((|t|−2)(|t|+2)) to keep accuracy near |t| = 2.
    const double root = std::sqrt((std::abs(t) - 2.0) * (std::abs(t) + 2.0));
    // + 0.0 turns a signed zero into +0 for undeformed elements.
    return 2.0 * std::copysign(1.0, t) * trace.inf / root + 0.0;
}

} // namespace mml
