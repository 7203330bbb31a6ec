#include <random>

#include "mml/gap.hpp"
#include "mml/kernels.hpp"
#include "point_check.hpp"

namespace mml {

BinSums sum_bin(const CurveBin& bin, const TermContext& ctx) {
    KahanSum d, h, k, deriv;
    for (const CurveClass& c : bin.members) {
        // One summand per curve: the pair {γ, γ} with ℓ₁ = ℓ₂ = ℓ(γ).
        const double ell_pair = 2.0 * c.length;
        const double alpha_pair = 2.0 * c.alpha;
        const double coeff_h = coeff_H(ell_pair, ctx.ell_boundary);
        const double k_term = coeff_K(ell_pair, ctx.ell_boundary) * alpha_pair;
        d.add(ctx.cusp ? cusp_gap(c.length, c.length) : gap_D(ctx.ell_boundary, c.length, c.length));
        h.add(coeff_h);
        k.add(k_term);
        deriv.add(coeff_h * ctx.alpha_boundary + k_term);
    }
    return {bin.n, bin.members.size(), d.value(), h.value(), k.value(), deriv.value()};
}

std::vector<BinSums> sum_bins_serial(const std::vector<CurveBin>& bins, const TermContext& ctx) {
    std::vector<BinSums> out;
    out.reserve(bins.size());
    for (const CurveBin& bin : bins) out.push_back(sum_bin(bin, ctx));
    return out;
}

std::vector<BinSums> sum_bins(const std::vector<CurveBin>& bins, const TermContext& ctx, Exec exec) {
    return exec == Exec::parallel ? sum_bins_parallel(bins, ctx) : sum_bins_serial(bins, ctx);
}

BinSums combine_bins(const std::vector<BinSums>& bins) {
    KahanSum d, h, k, deriv;
    std::size_t count = 0;
    for (const BinSums& b : bins) {
        d.add(b.sum_d);
        h.add(b.sum_h);
        k.add(b.sum_k);
        deriv.add(b.sum_deriv);
        count += b.count;
    }
    return {bins.empty() ? 0 : bins.back().n, count, d.value(), h.value(), k.value(), deriv.value()};
}

std::vector<GridPoint> random_positive_grid(std::size_t count, std::uint64_t seed, double hi) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(0.0, hi);
    std::vector<GridPoint> grid(count);
    for (GridPoint& p : grid) {
        for (double& v : p) {
            do {
                v = coord(rng);
            } while (v == 0.0);
        }
    }
    return grid;
}


BoundViolations check_bounds_serial(const std::vector<GridPoint>& grid) {
    BoundViolations v;
    v.points = grid.size();
    for (const GridPoint& p : grid) {
        const detail::PointViolations pv = detail::check_point(p);
        v.gap += pv.gap;
        v.coeff_h += pv.coeff_h;
        v.coeff_k += pv.coeff_k;
    }
    return v;
}

BoundViolations check_bounds(const std::vector<GridPoint>& grid, Exec exec) {
    return exec == Exec::parallel ? check_bounds_parallel(grid) : check_bounds_serial(grid);
}

} // namespace mml
