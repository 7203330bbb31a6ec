#include <doctest.h>

#include <sstream>
#include <string>

#include "mml/report_io.hpp"

using namespace mml;

namespace {

std::string error_of(auto&& f) {
    try {
        f();
    } catch (const InputError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("spec with every deformation kind") {
    const RepSpec zero = parse_rep_spec(R"({"x": 4, "y": 4.5, "z": 5})");
    CHECK(zero.coords.y == 4.5);
    CHECK(std::holds_alternative<ZeroDeformation>(zero.deformation));

    const RepSpec path =
        parse_rep_spec(R"({"x": 4, "y": 4, "z": 4, "deformation": {"kind": "path", "path_coeffs": [1, 0, -1], "h": 2e-4}})");
    const auto& p = std::get<PathDeformation>(path.deformation);
    CHECK(p.direction == std::array<double, 3>{1, 0, -1});
    CHECK(p.h == 2e-4);

    const RepSpec tangent = parse_rep_spec(R"({"x": 4, "y": 4, "z": 4, "deformation": {"kind": "tangent",
        "tangent_matrices": {"a": [[0.5, 0], [0, -0.5]], "b": [[0, 0], [0, 0]]}}})");
    CHECK(std::get<TangentDeformation>(tangent.deformation).a1.d == -0.5);

    const RepSpec random = parse_rep_spec(R"({"x": 4, "y": 4, "z": 4, "deformation": {"kind": "random", "seed": 12}})");
    CHECK(std::get<RandomTangentSpec>(random.deformation).seed == 12);
    CHECK(realize(random).deformation_label == "random:12");
}

TEST_CASE("realized path spec") {
    const RepSpec spec = parse_rep_spec(R"({"x": 4, "y": 4, "z": 4, "deformation": {"kind": "path"}})");
    const HoledTorusRep rep = realize(spec);
    CHECK(rep.deformation_label == "path");
    CHECK(rep.boundary.trace().inf == doctest::Approx(-24.0).epsilon(1e-7));
}

TEST_CASE("spec errors carry line context") {
    const std::string bad = "{\n  \"x\": 4,\n  \"y\": ,\n  \"z\": 4\n}";
    const std::string msg = error_of([&] { parse_rep_spec(bad); });
    CHECK(msg.find("line 3") != std::string::npos);
    CHECK(error_of([] { parse_rep_spec(R"({"x": 4, "y": 4})"); }).find("'z'") != std::string::npos);
    CHECK(error_of([] { parse_rep_spec(R"({"x": "4", "y": 4, "z": 4})"); }).find("'x'") != std::string::npos);
    CHECK(!error_of([] { parse_rep_spec(R"({"x": 4, "y": 4, "z": 4, "deformation": {"kind": "twist"}})"); })
               .empty());
    CHECK(!error_of([] {
               parse_rep_spec(R"({"x": 4, "y": 4, "z": 4, "deformation": {"kind": "tangent", "tangent_matrices": {"a": [[1]], "b": [[0,0],[0,0]]}}})");
           }).empty());
    CHECK(error_of([] { load_rep_spec("/nonexistent/spec.json"); }).find("cannot open") != std::string::npos);
}

TEST_CASE("number formatting round trips") {
    for (double v : {0.1, 1.0 / 3.0, 5.774541900715241, -2.5e-300, 1e22}) {
        CHECK(std::stod(format_number(v)) == v);
    }
    CHECK(format_number(4.0) == "4");
}

TEST_CASE("report JSON carries the report fields") {
    const SeriesReport r = mcshane_sum(build_rep({4, 4, 4}), 1e-6);
    const nlohmann::json j = to_json(r);
    for (const char* key : {"kind", "target", "partial_sum", "residual", "n_max", "tail_bound", "m_hat",
                            "kappa_hat", "h_partial_sum", "h_threshold_n", "bins", "pass", "coords", "deformation"}) {
        CHECK_MESSAGE(j.contains(key), key);
    }
    CHECK(j["bins"].size() == static_cast<std::size_t>(r.n_max + 1));
    CHECK(j["pass"] == true);
}

TEST_CASE("census CSV") {
    const CurveFamily fam = enumerate_bins(build_rep({4, 4, 4}), 20);
    std::ostringstream a, b;
    write_census(a, fam);
    write_census(b, enumerate_bins(build_rep({4, 4, 4}), 20));
    CHECK(a.str() == b.str());

    std::istringstream in(a.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "slope_p,slope_q,word,trace,length,bin\r");
    std::size_t rows = 0;
    std::string last;
    while (std::getline(in, line)) {
        CHECK(line.ends_with("\r"));
        last = line;
        ++rows;
    }
    CHECK(rows == fam.farey_order.size() + 1);
    CHECK(last.starts_with("summary,,m_hat,,"));
    CHECK(last.ends_with(",20\r"));
}

TEST_CASE("imported term CSV") {
    std::istringstream good("ell_gamma1,ell_gamma2,alpha_gamma1,alpha_gamma2\n1.5, 2.5, 0.1, -0.2\n\n3,4,0,0\n");
    const auto terms = read_imported_terms(good);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].ell2 == 2.5);
    CHECK(terms[0].alpha2 == -0.2);

    std::istringstream header("a,b,c,d\n1,2,3,4\n");
    CHECK(error_of([&] { read_imported_terms(header); }).find("line 1") != std::string::npos);
    std::istringstream cols("ell_gamma1,ell_gamma2,alpha_gamma1,alpha_gamma2\n1,2,3,4\n1,2,3\n");
    CHECK(error_of([&] { read_imported_terms(cols); }).find("line 3") != std::string::npos);
    std::istringstream num("ell_gamma1,ell_gamma2,alpha_gamma1,alpha_gamma2\n1,2,x,4\n");
    CHECK(error_of([&] { read_imported_terms(num); }).find("line 2") != std::string::npos);
    std::istringstream empty("");
    CHECK(!error_of([&] { read_imported_terms(empty); }).empty());
}

}
