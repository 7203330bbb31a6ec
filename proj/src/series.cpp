#include "mml/series.hpp"

#include <algorithm>
#include <cmath>

namespace mml {

namespace {

constexpr const char* kCertifiedLabel = "empirically certified";
constexpr const char* kImportedLabel = "uncertified (imported list)";

SeriesReport base_report(const HoledTorusRep& rep, const CurveFamily& fam, Exec exec) {
    SeriesReport r;
    r.coords = rep.coords;
    r.deformation = rep.deformation_label;
    r.ell_boundary = fam.boundary.length;
    r.alpha_boundary = fam.boundary.alpha;
    r.n_max = fam.n_max;
    r.m_hat = fam.m_hat;
    r.kappa_hat = fam.kappa_hat;
    r.tail_label = kCertifiedLabel;
    if (!fam.farey_order.empty()) {
        r.min_interior_alpha = std::ranges::min_element(fam.farey_order, {}, &CurveClass::alpha)->alpha;
    }

    const TermContext ctx{fam.boundary.length, fam.boundary.alpha, rep.cusped()};
    r.bins = sum_bins(fam.bins, ctx, exec);
    r.h_partial_sum = combine_bins(r.bins).sum_h;
    r.h_threshold_n = mirzakhani_threshold(r.bins).threshold_n;

    const TailInputs in{fam.m_hat, fam.kappa_hat, fam.boundary.length, fam.boundary.alpha};
    r.tail_bound_identity = tail_bound(rep.cusped() ? TailKind::cusp : TailKind::identity, fam.n_max, in);
    r.tail_bound_derivative = tail_bound(TailKind::derivative, fam.n_max, in);
    return r;
}

void decide(SeriesReport& r, double tolerance) {
    r.tolerance = tolerance;
    r.pass = std::abs(r.residual) <= std::max(r.tail_bound, tolerance);
}

} // namespace

SeriesReport mcshane_sum(const HoledTorusRep& rep, double tail_tolerance, int n_ceiling, Exec exec) {
    const TailKind kind = rep.cusped() ? TailKind::cusp : TailKind::identity;
    const CurveFamily fam = enumerate_family(rep, tail_tolerance, kind, n_ceiling, exec);

    SeriesReport r = base_report(rep, fam, exec);
    r.kind = rep.cusped() ? "mcshane-cusp" : "mcshane";
    r.target = rep.cusped() ? 1.0 : fam.boundary.length;
    r.partial_sum = combine_bins(r.bins).sum_d;
    r.residual = r.target - r.partial_sum;
    r.tail_bound = r.tail_bound_identity;
    decide(r, tail_tolerance);
    return r;
}

SeriesReport margulis_residual(const HoledTorusRep& rep, double tail_tolerance, int n_ceiling, Exec exec) {
    if (rep.cusped()) {
        throw NotHyperbolic("boundary parabolic: the Margulis identity needs a hyperbolic boundary");
    }
    const CurveFamily fam = enumerate_family(rep, tail_tolerance, TailKind::derivative, n_ceiling, exec);

    SeriesReport r = base_report(rep, fam, exec);
    r.kind = "margulis";
    const BinSums total = combine_bins(r.bins);
    r.target = fam.boundary.alpha;
    r.partial_sum = total.sum_deriv;
    r.lhs = (1.0 - total.sum_h) * fam.boundary.alpha;
    r.rhs = total.sum_k;
    r.residual = r.lhs - r.rhs;
    r.tail_bound = r.tail_bound_derivative;
    decide(r, tail_tolerance);
    return r;
}

MirzakhaniReport mirzakhani_threshold(const std::vector<BinSums>& bins) {
    MirzakhaniReport out;
    KahanSum running;
    for (const BinSums& b : bins) {
        running.add(b.sum_h);
        out.running.push_back(running.value());
        if (!out.threshold_n && running.value() > 1.0) out.threshold_n = b.n;
    }
    return out;
}

MirzakhaniReport mirzakhani_threshold(const HoledTorusRep& rep, int n_ceiling, Exec exec) {
    const BoundaryData boundary = boundary_data(rep);
    if (!(boundary.length > 0.0)) {
        throw NotHyperbolic("boundary parabolic: the threshold needs a hyperbolic boundary");
    }
    int n = std::min(16, n_ceiling);
    while (true) {
        const CurveFamily fam = enumerate_bins(rep, n, exec);
        const TermContext ctx{boundary.length, boundary.alpha, false};
        MirzakhaniReport out = mirzakhani_threshold(sum_bins(fam.bins, ctx, exec));
        if (out.threshold_n || n >= n_ceiling) return out;
        n = std::min(2 * n, n_ceiling);
    }
}

double kappa_estimate(const CurveFamily& family) { return family.kappa_hat; }

double kappa_estimate(const HoledTorusRep& rep, int n_max) { return enumerate_bins(rep, n_max).kappa_hat; }

SeriesReport mcshane_sum_imported(std::span<const ImportedTerm> terms, double ell_boundary, double tolerance) {
    SeriesReport r;
    r.kind = "mcshane-imported";
    r.tail_label = kImportedLabel;
    r.ell_boundary = ell_boundary;
    KahanSum d, h;
    for (const ImportedTerm& t : terms) {
        d.add(gap_D(ell_boundary, t.ell1, t.ell2));
        h.add(coeff_H(t.ell1 + t.ell2, ell_boundary));
    }
    r.target = ell_boundary;
    r.partial_sum = d.value();
    r.residual = r.target - r.partial_sum;
    r.h_partial_sum = h.value();
    decide(r, tolerance);
    return r;
}

SeriesReport margulis_residual_imported(std::span<const ImportedTerm> terms, double ell_boundary,
                                        double alpha_boundary, double tolerance) {
    SeriesReport r;
    r.kind = "margulis-imported";
    r.tail_label = kImportedLabel;
    r.ell_boundary = ell_boundary;
    r.alpha_boundary = alpha_boundary;
    KahanSum h, k, deriv;
    for (const ImportedTerm& t : terms) {
        h.add(coeff_H(t.ell1 + t.ell2, ell_boundary));
        k.add(coeff_K(t.ell1 + t.ell2, ell_boundary) * (t.alpha1 + t.alpha2));
        deriv.add(term_derivative(t.ell1, t.ell2, ell_boundary, t.alpha1, t.alpha2, alpha_boundary));
    }
    r.target = alpha_boundary;
    r.partial_sum = deriv.value();
    r.h_partial_sum = h.value();
    r.lhs = (1.0 - h.value()) * alpha_boundary;
    r.rhs = k.value();
    r.residual = r.lhs - r.rhs;
    decide(r, tolerance);
    return r;
}

} // namespace mml
