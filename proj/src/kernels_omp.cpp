#include <algorithm>
#include <cstdlib>
#include <string>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "mml/kernels.hpp"
#include "point_check.hpp"

namespace mml {

int worker_count() {
#if defined(_OPENMP)
    int n = omp_get_max_threads();
#else
    int n = 1;
#endif
    if (const char* cap = std::getenv("MML_THREADS")) {
        const int requested = std::atoi(cap);
        if (requested > 0) n = std::min(n, requested);
    }
    return std::max(n, 1);
}

std::vector<BinSums> sum_bins_parallel(const std::vector<CurveBin>& bins, const TermContext& ctx) {
    std::vector<BinSums> out(bins.size());
    const auto n = static_cast<std::ptrdiff_t>(bins.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = sum_bin(bins[static_cast<std::size_t>(i)], ctx);
    }
    return out;
}

double max_trace_discrepancy(const HoledTorusRep& rep, const std::vector<CurveClass>& curves, Exec exec) {
    double worst = 0.0;
    const auto n = static_cast<std::ptrdiff_t>(curves.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for reduction(max : worst) schedule(dynamic, 16) num_threads(worker_count())
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            worst = std::max(worst, trace_discrepancy(rep, curves[static_cast<std::size_t>(i)]));
        }
    } else {
        for (const CurveClass& c : curves) worst = std::max(worst, trace_discrepancy(rep, c));
    }
    return worst;
}

void cross_check_traces(const HoledTorusRep& rep, const std::vector<CurveClass>& curves, Exec exec) {
    std::vector<char> bad(curves.size(), 0);
    const auto n = static_cast<std::ptrdiff_t>(curves.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(worker_count())
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const auto k = static_cast<std::size_t>(i);
            bad[k] = trace_discrepancy(rep, curves[k]) > kRecursionMismatchTol;
        }
    } else {
        for (std::size_t k = 0; k < curves.size(); ++k) {
            bad[k] = trace_discrepancy(rep, curves[k]) > kRecursionMismatchTol;
        }
    }
    const auto it = std::find(bad.begin(), bad.end(), 1);
    if (it != bad.end()) {
        const Slope s = curves[static_cast<std::size_t>(it - bad.begin())].slope;
        throw RecursionMismatch("trace recursion and word evaluation disagree at slope " +
                                std::to_string(s.p) + "/" + std::to_string(s.q));
    }
}

BoundViolations check_bounds_parallel(const std::vector<GridPoint>& grid) {
    std::size_t gap = 0, coeff_h = 0, coeff_k = 0;
    const auto n = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for reduction(+ : gap, coeff_h, coeff_k) num_threads(worker_count())
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const detail::PointViolations pv = detail::check_point(grid[static_cast<std::size_t>(i)]);
        gap += pv.gap;
        coeff_h += pv.coeff_h;
        coeff_k += pv.coeff_k;
    }
    return {grid.size(), gap, coeff_h, coeff_k};
}

} // namespace mml
