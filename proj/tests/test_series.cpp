#include <doctest.h>

#include <cmath>
#include <vector>

#include "mml/series.hpp"
#include "oracles.hpp"

using namespace mml;

namespace {

double sum_d(const CurveFamily& fam) { return combine_bins(sum_bins_serial(fam.bins, {fam.boundary.length, fam.boundary.alpha, false})).sum_d; }

} // namespace

TEST_SUITE("series") {

TEST_CASE("length identity on (4,4,4)") {
    const SeriesReport r = mcshane_sum(build_rep({4, 4, 4}), 1e-6);
    CHECK(r.kind == "mcshane");
    CHECK(r.target == doctest::Approx(oracle::kBoundary444).epsilon(1e-14));
    CHECK(std::abs(r.residual) <= 1e-6);
    CHECK(r.tail_bound <= 1e-6);
    CHECK(r.residual >= 0.0);
    CHECK(r.n_max <= 60);
    CHECK(r.pass);
    CHECK(r.tail_label == "empirically certified");
}

TEST_CASE("partial sums increase with depth") {
    const HoledTorusRep rep = build_rep({4, 4, 4});
    double prev = 0;
    for (int n : {10, 20, 30, 40}) {
        const double s = sum_d(enumerate_bins(rep, n));
        CHECK(s > prev);
        CHECK(s < oracle::kBoundary444);
        prev = s;
    }
}

TEST_CASE("rearranging the series does not change the sum") {
    const HoledTorusRep rep = build_rep({4.5, 5, 4.2});
    const CurveFamily fam = enumerate_bins(rep, 40);
    KahanSum farey;
    for (const CurveClass& c : fam.farey_order) farey.add(gap_D(fam.boundary.length, c.length, c.length));
    CHECK(farey.value() == doctest::Approx(sum_d(fam)).epsilon(1e-10));
}

TEST_CASE("cusp limit on (3,3,3)") {
    const SeriesReport r = mcshane_sum(build_rep({3, 3, 3}), 1e-6);
    CHECK(r.kind == "mcshane-cusp");
    CHECK(r.target == 1.0);
    CHECK(r.partial_sum == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(r.pass);
}

TEST_CASE("Margulis residual examples") {
    const HoledTorusRep base = build_rep({4, 4, 4});
    const SeriesReport zero = margulis_residual(base, 1e-6);
    CHECK(zero.residual == 0.0);
    CHECK(zero.pass);

    const SeriesReport path = margulis_residual(attach_deformation(base, PathDeformation{}), 1e-6);
    CHECK(path.alpha_boundary == doctest::Approx(oracle::kPathAlpha444).epsilon(1e-8));
    CHECK(std::abs(path.residual) <= 1e-5);
    CHECK(path.pass);
    // Summing the differentiated series term by term recovers α(∂).
    CHECK(path.partial_sum == doctest::Approx(path.alpha_boundary).epsilon(1e-5));

    CHECK_THROWS_AS(margulis_residual(build_rep({3, 3, 3}), 1e-6), NotHyperbolic);
}

TEST_CASE("Margulis residual for random tangents stays within the tail") {
    const HoledTorusRep base = build_rep({5, 4.5, 5.5});
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        const SeriesReport r = margulis_residual(attach_deformation(base, random_tangent(base, seed)), 1e-6);
        CHECK(std::abs(r.residual) <= std::max(1e-5, r.tail_bound));
        CHECK(r.pass);
    }
}

TEST_CASE("residual is linear in the deformation") {
    const HoledTorusRep base = build_rep({4.4, 4.8, 5.2});
    TangentDeformation t = random_tangent(base, 5);
    const SeriesReport r1 = margulis_residual(attach_deformation(base, t), 1e-6);
    t.a1 = 2.0 * t.a1;
    t.b1 = 2.0 * t.b1;
    const SeriesReport r2 = margulis_residual(attach_deformation(base, t), 1e-6);
    CHECK(r2.alpha_boundary == doctest::Approx(2 * r1.alpha_boundary).epsilon(1e-10));
}

TEST_CASE("threshold of the running H sum") {
    const MirzakhaniReport m = mirzakhani_threshold(build_rep({4, 4, 4}));
    REQUIRE(m.threshold_n.has_value());
    CHECK(m.running.at(static_cast<std::size_t>(*m.threshold_n)) > 1.0);
    for (std::size_t i = 1; i < m.running.size(); ++i) CHECK(m.running[i] >= m.running[i - 1]);
    CHECK_THROWS_AS(mirzakhani_threshold(build_rep({3, 3, 3})), NotHyperbolic);
}

TEST_CASE("every term satisfies D/L < H") {
    const CurveFamily fam = enumerate_bins(build_rep({4, 4, 4}), 40);
    const double L = fam.boundary.length;
    for (const CurveClass& c : fam.farey_order) {
        CHECK(gap_D(L, c.length, c.length) / L < coeff_H(2 * c.length, L));
    }
}

TEST_CASE("kappa estimate") {
    const HoledTorusRep base = build_rep({4, 4, 4});
    CHECK(kappa_estimate(base, 20) == 0.0);
    const double s = 0.6;
    const RealMatrix2 a0 = value_part(base.a);
    const HoledTorusRep diag = attach_deformation(base, TangentDeformation{(0.5 * s) * (a0 * RealMatrix2{1, 0, 0, -1}), {}});
    CHECK(kappa_estimate(diag, 20) >= s / translation_length(4.0) - 1e-12);

    const HoledTorusRep rep = attach_deformation(base, random_tangent(base, 3));
    std::vector<double> k;
    for (int n : {10, 20, 30, 40, 50}) k.push_back(kappa_estimate(rep, n));
    for (std::size_t i = 1; i < k.size(); ++i) {
        CHECK(k[i] >= k[i - 1]);
        CHECK(k[i] <= 2.0 * k[0]);
    }
}

TEST_CASE("imported lists reproduce the enumerated sums") {
    const HoledTorusRep rep = attach_deformation(build_rep({4, 4, 4}), PathDeformation{});
    const SeriesReport direct = margulis_residual(rep, 1e-6);
    const CurveFamily fam = enumerate_bins(rep, direct.n_max);
    std::vector<ImportedTerm> terms;
    for (const CurveClass& c : fam.farey_order) terms.push_back({c.length, c.length, c.alpha, c.alpha});

    const SeriesReport m = mcshane_sum_imported(terms, fam.boundary.length, 1e-6);
    CHECK(m.kind == "mcshane-imported");
    CHECK(m.tail_label == "uncertified (imported list)");
    CHECK(m.partial_sum == doctest::Approx(sum_d(fam)).epsilon(1e-12));
    CHECK(m.pass);

    const SeriesReport g = margulis_residual_imported(terms, fam.boundary.length, fam.boundary.alpha, 1e-5);
    CHECK(g.residual == doctest::Approx(direct.residual).epsilon(1e-9).scale(1e-9));
    CHECK(g.pass);
}

}
