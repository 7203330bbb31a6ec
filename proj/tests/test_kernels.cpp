#include <doctest.h>

#include <cstring>
#include <sstream>
#include <string>

#include "mml/kernels.hpp"
#include "mml/series.hpp"

using namespace mml;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

} // namespace

TEST_SUITE("kernels") {

TEST_CASE("compensated sum") {
    KahanSum s;
    s.add(1.0);
    for (int i = 0; i < 1000; ++i) s.add(1e-16);
    s.add(-1.0);
    CHECK(s.value() == doctest::Approx(1e-13).epsilon(1e-12));
}

TEST_CASE("parallel bin sums are bitwise identical to the reference") {
    for (const TraceCoords c : {TraceCoords{4, 4, 4}, TraceCoords{4.5, 5.5, 5}, TraceCoords{3, 3, 3}}) {
        const HoledTorusRep base = build_rep(c);
        const HoledTorusRep rep = base.cusped() ? base : attach_deformation(base, random_tangent(base, 9));
        const CurveFamily fam = enumerate_bins(rep, 45);
        const TermContext ctx{fam.boundary.length, fam.boundary.alpha, rep.cusped()};
        const auto serial = sum_bins_serial(fam.bins, ctx);
        const auto parallel = sum_bins_parallel(fam.bins, ctx);
        REQUIRE(serial.size() == parallel.size());
        for (std::size_t i = 0; i < serial.size(); ++i) {
            CHECK(serial[i].n == parallel[i].n);
            CHECK(serial[i].count == parallel[i].count);
            CHECK(same_bits(serial[i].sum_d, parallel[i].sum_d));
            CHECK(same_bits(serial[i].sum_h, parallel[i].sum_h));
            CHECK(same_bits(serial[i].sum_k, parallel[i].sum_k));
            CHECK(same_bits(serial[i].sum_deriv, parallel[i].sum_deriv));
        }
        const BinSums a = combine_bins(serial), b = combine_bins(parallel);
        CHECK(same_bits(a.sum_d, b.sum_d));
        CHECK(same_bits(a.sum_deriv, b.sum_deriv));
    }
}

TEST_CASE("families agree across execution modes") {
    const HoledTorusRep rep = build_rep({5, 5, 5});
    const CurveFamily s = enumerate_bins(rep, 40, Exec::serial);
    const CurveFamily p = enumerate_bins(rep, 40, Exec::parallel);
    CHECK(s.farey_order.size() == p.farey_order.size());
    CHECK(same_bits(s.m_hat, p.m_hat));
    const SeriesReport rs = mcshane_sum(rep, 1e-6, 200, Exec::serial);
    const SeriesReport rp = mcshane_sum(rep, 1e-6, 200, Exec::parallel);
    CHECK(same_bits(rs.partial_sum, rp.partial_sum));
}

TEST_CASE("bound checks agree across execution modes") {
    const auto grid = random_positive_grid(20000, 77);
    CHECK(grid.size() == 20000);
    for (const GridPoint& p : grid) {
        for (double v : p) {
            CHECK(v > 0.0);
            CHECK(v < 10.0);
        }
    }
    CHECK(random_positive_grid(10, 77) == std::vector<GridPoint>(grid.begin(), grid.begin() + 10));
    const BoundViolations s = check_bounds_serial(grid);
    CHECK(s == check_bounds_parallel(grid));
    CHECK(s.points == grid.size());
    CHECK(s.gap == 0);
    CHECK(s.coeff_h == 0);
    CHECK(s.coeff_k == 0);
}

TEST_CASE("bound check counts violations") {
    // For x < 0 the D majorant is negative, so the point counts as a violation.
    const std::vector<GridPoint> bad{{-1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}};
    CHECK(check_bounds_serial(bad).gap == 1);
    CHECK(check_bounds_parallel(bad).gap == 1);
}

TEST_CASE("trace cross-check reports the first mismatch") {
    const HoledTorusRep rep = build_rep({4, 4, 4});
    std::vector<CurveClass> curves = enumerate_bins(rep, 25).farey_order;
    CHECK_NOTHROW(cross_check_traces(rep, curves, Exec::parallel));
    CHECK(max_trace_discrepancy(rep, curves, Exec::serial) < 1e-9);
    REQUIRE(curves.size() > 20);
    curves[17].trace.re *= 1.01;
    curves[5].trace.re *= 1.01;
    for (Exec e : {Exec::serial, Exec::parallel}) {
        try {
            cross_check_traces(rep, curves, e);
            FAIL("expected RecursionMismatch");
        } catch (const RecursionMismatch& err) {
            std::ostringstream slope;
            slope << curves[5].slope;
            const std::string what = err.what();
            CHECK(what.ends_with(" " + slope.str()));
        }
    }
}

TEST_CASE("worker count") { CHECK(worker_count() >= 1); }

}
