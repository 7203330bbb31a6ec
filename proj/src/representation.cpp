#include "mml/representation.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "mml/curves.hpp"
#include "mml/lorentz.hpp"

namespace mml {

namespace {

constexpr double kTangentTol = 1e-10;

TraceCoords shifted(const TraceCoords& c, const std::array<double, 3>& dir, double t) {
    return {c.x + t * dir[0], c.y + t * dir[1], c.z + t * dir[2]};
}

HoledTorusRep with_tangents(const HoledTorusRep& rep, const RealMatrix2& a1, const RealMatrix2& b1,
                            std::string label) {
    HoledTorusRep out = rep;
    out.a = lift(value_part(rep.a), a1);
    out.b = lift(value_part(rep.b), b1);
    out.boundary = commutator(out.a, out.b);
    out.deformation_label = std::move(label);
    return out;
}

// Slopes at Stern–Brocot depth ≤ depth on both sides of the tree.
std::vector<Slope> slopes_to_depth(int depth) {
    std::vector<Slope> out{{1, 0}, {0, 1}};
    struct Node {
        Slope left, right;
        int depth;
    };
    std::vector<Node> stack{{{0, 1}, {1, 0}, 1}, {{0, 1}, {-1, 0}, 1}};
    while (!stack.empty()) {
        const Node node = stack.back();
        stack.pop_back();
        if (node.depth > depth) continue;
        const Slope mid{node.left.p + node.right.p, node.left.q + node.right.q};
        out.push_back(mid);
        stack.push_back({mid, node.right, node.depth + 1});
        stack.push_back({node.left, mid, node.depth + 1});
    }
    return out;
}

} // namespace

HoledTorusRep build_rep(const TraceCoords& c) {
    if (!std::isfinite(c.x) || !std::isfinite(c.y) || !std::isfinite(c.z)) {
        throw InvalidCoords("trace coordinates must be finite");
    }
    if (!(c.x > 2.0)) {
        std::ostringstream msg;
        msg << "x = " << c.x << " must exceed 2 for a diagonal hyperbolic generator";
        throw InvalidCoords(msg.str());
    }
    const double lambda = (c.x + std::sqrt((c.x - 2.0) * (c.x + 2.0))) / 2.0;
    const double inv = 1.0 / lambda;
    // p + d = y and λp + d/λ = z; off-diagonal (1, pd − 1) makes det B = 1.
    const double p = (c.z - c.y * inv) / (lambda - inv);
    const double d = c.y - p;

    HoledTorusRep rep;
    rep.a = lift({lambda, 0.0, 0.0, inv});
    rep.b = lift({p, 1.0, p * d - 1.0, d});
    rep.boundary = commutator(rep.a, rep.b);
    rep.coords = c;
    rep.deformation_label = "zero";
    return rep;
}

ValidationReport validate_fuchsian(const HoledTorusRep& rep, int sample_depth) {
    const TraceCoords& c = rep.coords;
    if (!(c.x > 2.0 && c.y > 2.0 && c.z > 2.0)) {
        return {false, "coords-not-above-2", std::nullopt};
    }
    const double kappa = rep.boundary.trace().re;
    if (std::abs(kappa + 2.0) <= kCuspTol) return {false, "boundary-parabolic", std::nullopt};
    if (!(kappa < -2.0)) return {false, "boundary-not-hyperbolic", std::nullopt};

    TraceRecursion recursion(rep);
    for (const Slope& s : slopes_to_depth(sample_depth)) {
        if (!(std::abs(recursion.trace(s).re) > 2.0)) {
            return {false, "curve-not-hyperbolic", s};
        }
    }
    return {};
}

HoledTorusRep attach_deformation(const HoledTorusRep& rep, const DeformationSpec& spec) {
    const RealMatrix2 a0 = value_part(rep.a);
    const RealMatrix2 b0 = value_part(rep.b);

    if (std::holds_alternative<ZeroDeformation>(spec)) {
        return with_tangents(rep, {}, {}, "zero");
    }
    if (const auto* tangent = std::get_if<TangentDeformation>(&spec)) {
        const double drift_a = (a0.adjugate() * tangent->a1).trace();
        const double drift_b = (b0.adjugate() * tangent->b1).trace();
        if (std::abs(drift_a) > kTangentTol || std::abs(drift_b) > kTangentTol) {
            throw InvalidCoords("tangent deformation leaves SL(2): tr(M0^-1 M1) != 0");
        }
        return with_tangents(rep, tangent->a1, tangent->b1, "tangent");
    }

    const auto& path = std::get<PathDeformation>(spec);
    if (!(path.h > 0.0)) throw InvalidCoords("path step h must be positive");
    const HoledTorusRep plus = build_rep(shifted(rep.coords, path.direction, path.h));
    const HoledTorusRep minus = build_rep(shifted(rep.coords, path.direction, -path.h));
    const double scale = 1.0 / (2.0 * path.h);
    const RealMatrix2 a1 = scale * (value_part(plus.a) - value_part(minus.a));
    const RealMatrix2 b1 = scale * (value_part(plus.b) - value_part(minus.b));
    return with_tangents(rep, project_tangent(a0, a1), project_tangent(b0, b1), "path");
}

TangentDeformation random_tangent(const HoledTorusRep& rep, std::uint64_t seed, double scale) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-scale, scale);
    auto draw = [&] {
        Eigen::Vector3d v;
        for (int i = 0; i < 3; ++i) v[i] = coord(rng);
        return sl2_from_coords(v);
    };
    const RealMatrix2 x = draw();
    const RealMatrix2 y = draw();
    return {value_part(rep.a) * x, value_part(rep.b) * y};
}

} // namespace mml
