#pragma once

#include <map>
#include <string>
#include <vector>

#include "mml/representation.hpp"
#include "mml/slope.hpp"
#include "mml/tail.hpp"

namespace mml {

enum class Exec { serial, parallel };

/// One isotopy class of simple closed curve, evaluated in a representation.
struct CurveClass {
    Slope slope;
    std::string word;   ///< Christoffel word; a ↦ A⁻¹ when p < 0
    Dual trace;         ///< dual trace from the Farey recursion
    double length = 0;  ///< 2·arccosh(|tr|/2)
    double alpha = 0;   ///< Margulis invariant (dℓ along the deformation)
};

/// Curves with N ≤ 2ℓ(γ) < N + 1.
struct CurveBin {
    int n = 0;
    std::vector<CurveClass> members;
};

/// Canonical slopes with |p| + q ≤ bound, breadth-first in the Stern–Brocot tree.
std::vector<Slope> farey_enumerate(int max_denominator_sum);

/// Lower Christoffel word of |p|/q over {a, b}; contains |p| a's and q b's.
std::string slope_word(const Slope& s);

/// Direct product of the slope's word in the representation (A⁻¹ for p < 0).
DualMatrix2 evaluate_word(const HoledTorusRep& rep, const Slope& s);

/// Memoized Farey trace recursion tr(UV) = tr U·tr V − tr(UV⁻¹), over R[ε].
///
/// Seeded with tr A, tr B, tr AB (and tr A⁻¹B for negative slopes). Build
/// once, then share read-only.
class TraceRecursion {
public:
    explicit TraceRecursion(const HoledTorusRep& rep);

    Dual trace(const Slope& s);

private:
    std::map<Slope, Dual> memo_;
};

/// Relative tolerance for recursion vs direct evaluation before RecursionMismatch.
inline constexpr double kRecursionMismatchTol = 1e-6;

/// Value-part trace of a slope, computed both ways; throws RecursionMismatch
/// if they disagree.
double slope_trace(const HoledTorusRep& rep, const Slope& s);

/// Recursion-vs-direct discrepancy for one curve, relative to max(1, |tr|).
double trace_discrepancy(const HoledTorusRep& rep, const CurveClass& c);

/// All simple closed curves with ℓ < length_cutoff, in depth-first Stern–Brocot
/// order (1/0, 0/1, then the p > 0 tree, then the p < 0 tree).
///
/// Subtrees are pruned once a node reaches the cutoff; the traversal throws if
/// a child is shorter than its parent, since pruning relies on that ordering.
/// Throws NotHyperbolic if a visited curve has |trace| ≤ 2.
std::vector<CurveClass> enumerate_curves(const HoledTorusRep& rep, double length_cutoff);

/// Group curves into bins 0..n_max; curves with 2ℓ ≥ n_max + 1 are dropped.
std::vector<CurveBin> bin_curves(const std::vector<CurveClass>& curves, int n_max);

/// max over non-empty bins of |𝒞_N| / (N + 1)².
double fit_bin_constant(const std::vector<CurveBin>& bins);

/// Boundary data of the representation.
struct BoundaryData {
    Dual trace;          ///< tr[A, B] over R[ε]
    double length = 0;   ///< 0 for a cusp
    double alpha = 0;
};

BoundaryData boundary_data(const HoledTorusRep& rep);

/// Enumerated, verified and binned curve family.
struct CurveFamily {
    int n_max = 0;
    std::vector<CurveBin> bins;              ///< bins 0..n_max
    std::vector<CurveClass> farey_order;     ///< the same curves in traversal order
    BoundaryData boundary;
    double m_hat = 0;                        ///< fit_bin_constant(bins)
    double kappa_hat = 0;                    ///< max |α|/ℓ including the boundary
    double tail_bound = 0;                   ///< certified tail of the chosen kind
};

/// Enumerate every curve with 2ℓ < n_max + 1, cross-checking each trace.
CurveFamily enumerate_bins(const HoledTorusRep& rep, int n_max, Exec exec = Exec::serial);

/// Smallest complete family whose certified tail of `kind` is ≤ tail_tolerance.
///
/// Grows N_max until the tail computed from the fitted m̂ (and κ̂) drops below
/// tolerance, then trims back to the smallest such N_max. Throws
/// NonConvergence if no N_max ≤ n_ceiling suffices.
CurveFamily enumerate_family(const HoledTorusRep& rep, double tail_tolerance, TailKind kind,
                             int n_ceiling = 200, Exec exec = Exec::serial);

} // namespace mml
