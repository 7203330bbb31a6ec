#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "mml/curves.hpp"

namespace mml {

/// Neumaier-compensated running sum.
class KahanSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Boundary quantities shared by every summand.
struct TermContext {
    double ell_boundary = 0;
    double alpha_boundary = 0;
    bool cusp = false;
};

/// Per-bin compensated sums of the identity and derivative summands.
struct BinSums {
    int n = 0;
    std::size_t count = 0;
    double sum_d = 0;     ///< Σ D(ℓ∂, ℓ, ℓ), or Σ 2/(1 + e^ℓ) for a cusp
    double sum_h = 0;     ///< Σ H(2ℓ, ℓ∂)
    double sum_k = 0;     ///< Σ K(2ℓ, ℓ∂)·2α
    double sum_deriv = 0; ///< Σ (H·α∂ + K·2α)
};

/// Sums over one bin, in member order. Both execution paths call this.
BinSums sum_bin(const CurveBin& bin, const TermContext& ctx);

/// Reference implementation: bins one after another.
std::vector<BinSums> sum_bins_serial(const std::vector<CurveBin>& bins, const TermContext& ctx);

/// OpenMP over bins; each bin is still summed serially, so the result is
/// bitwise identical to sum_bins_serial.
std::vector<BinSums> sum_bins_parallel(const std::vector<CurveBin>& bins, const TermContext& ctx);

std::vector<BinSums> sum_bins(const std::vector<CurveBin>& bins, const TermContext& ctx, Exec exec);

/// Compensated totals over bins, combined in bin-index order.
BinSums combine_bins(const std::vector<BinSums>& bins);

/// Throws RecursionMismatch for the first (lowest-index) curve whose recursion
/// trace disagrees with direct word evaluation.
void cross_check_traces(const HoledTorusRep& rep, const std::vector<CurveClass>& curves, Exec exec);

/// Largest recursion-vs-direct discrepancy over `curves`.
double max_trace_discrepancy(const HoledTorusRep& rep, const std::vector<CurveClass>& curves, Exec exec);

using GridPoint = std::array<double, 3>;

/// `count` points uniform in (0, hi)³, deterministic in `seed`.
std::vector<GridPoint> random_positive_grid(std::size_t count, std::uint64_t seed, double hi = 10.0);

struct BoundViolations {
    std::size_t points = 0;
    std::size_t gap = 0;   ///< |D(x,y,z)| > 4 sinh(x/2) e^{−(y+z)/2}
    std::size_t coeff_h = 0; ///< |H(y+z, x)| ≥ 2 cosh(|x|/2) e^{−(y+z)/2}
    std::size_t coeff_k = 0; ///< |K(y+z, x)| ≥ 2 cosh(|x|/2) e^{−(y+z)/2}

    friend bool operator==(const BoundViolations&, const BoundViolations&) = default;
};

BoundViolations check_bounds_serial(const std::vector<GridPoint>& grid);
BoundViolations check_bounds_parallel(const std::vector<GridPoint>& grid);
BoundViolations check_bounds(const std::vector<GridPoint>& grid, Exec exec);

/// Worker count for parallel kernels (MML_THREADS caps it when set).
int worker_count();

} // namespace mml
