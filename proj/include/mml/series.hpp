#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mml/curves.hpp"
#include "mml/gap.hpp"
#include "mml/kernels.hpp"
#include "mml/tail.hpp"

namespace mml {

/// Outcome of summing one of the identities over a curve family.
///
/// For the length identity, target = ℓ∂ and partial_sum = Σ D. For the
/// Margulis identity, target = α∂, partial_sum = Σ d/dt D and
/// residual = lhs − rhs with lhs = (1 − ΣH)·α∂ and rhs = Σ K·(α₁ + α₂).
struct SeriesReport {
    std::string kind;
    std::optional<TraceCoords> coords;
    std::string deformation;

    double target = 0;
    double partial_sum = 0;
    double residual = 0;
    double lhs = 0;
    double rhs = 0;
    double ell_boundary = 0;
    double alpha_boundary = 0;

    int n_max = 0;
    std::vector<BinSums> bins;

    double tail_bound = 0; ///< the bound that gates `pass`
    double tail_bound_identity = 0;
    double tail_bound_derivative = 0;
    std::string tail_label;

    double m_hat = 0;
    double kappa_hat = 0;
    double h_partial_sum = 0;
    std::optional<int> h_threshold_n;
    double min_interior_alpha = 0; ///< min α(γ) over enumerated curves

    double tolerance = 0;
    bool pass = false;
};

/// Sums D(ℓ∂, ℓγ, ℓγ) over the curves of a holed torus until the certified
/// tail is below `tail_tolerance`. A cusped boundary switches to the limiting
/// summand 2/(1 + e^{ℓγ}) with target 1.
SeriesReport mcshane_sum(const HoledTorusRep& rep, double tail_tolerance, int n_ceiling = 200,
                         Exec exec = Exec::serial);

/// Checks (1 − ΣH)·α(∂) = ΣK·(α(γ₁) + α(γ₂)) for the attached deformation.
/// Throws NotHyperbolic for a cusped boundary.
SeriesReport margulis_residual(const HoledTorusRep& rep, double tail_tolerance, int n_ceiling = 200,
                               Exec exec = Exec::serial);

/// Running Σ H(2ℓγ, ℓ∂) per bin and the first bin where it exceeds 1.
struct MirzakhaniReport {
    std::vector<double> running;
    std::optional<int> threshold_n;
};

MirzakhaniReport mirzakhani_threshold(const std::vector<BinSums>& bins);

/// Enumerates progressively deeper families until the running ΣH passes 1
/// or the ceiling is reached.
MirzakhaniReport mirzakhani_threshold(const HoledTorusRep& rep, int n_ceiling = 200,
                                      Exec exec = Exec::serial);

/// max |α(γ)|/ℓ(γ) over the family's curves and the boundary.
double kappa_estimate(const CurveFamily& family);
double kappa_estimate(const HoledTorusRep& rep, int n_max);

/// One externally supplied pants pair {γ₁, γ₂} (general genus).
struct ImportedTerm {
    double ell1 = 0;
    double ell2 = 0;
    double alpha1 = 0;
    double alpha2 = 0;
};

/// Length identity over an imported list; no tail certification.
SeriesReport mcshane_sum_imported(std::span<const ImportedTerm> terms, double ell_boundary, double tolerance);

/// Margulis identity over an imported list; no tail certification.
SeriesReport margulis_residual_imported(std::span<const ImportedTerm> terms, double ell_boundary,
                                        double alpha_boundary, double tolerance);

} // namespace mml
