// Command-line front end for the identity verification engine.
//
//   mml verify-mcshane  --coords 4,4,4 [--tol 1e-6] [--out report.json]
//   mml verify-margulis --coords 4,4,4 --deform path|tangent|zero [--seed S]
//   mml census          --coords 4,4,4 --n-max 20 [--format csv|json]
//   mml sweep           [--triples 5] [--seeds 20] [--seed S]
//
// Exit status: 0 verified, 1 invalid input, 2 tail did not converge,
// 3 residual outside the certified bound.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mml/report_io.hpp"
#include "mml/series.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitNonConvergence = 2;
constexpr int kExitResidual = 3;

constexpr int kValidationDepth = 8;

struct Options {
    std::string coords;
    std::string spec;
    std::string deform = "zero";
    double h = 1e-4;
    double tol = 1e-6;
    int n_ceiling = 200;
    std::optional<int> n_max;
    std::uint64_t seed = 20150701;
    std::string out;
    std::string format = "json";
    std::string import_path;
    double ell_boundary = 0;
    double alpha_boundary = 0;
    int triples = 5;
    int seeds = 20;
    double lo = 3.5;
    double hi = 6.0;
};

mml::TraceCoords parse_coords(const std::string& text) {
    std::stringstream ss(text);
    std::vector<double> v;
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(cell, &used));
            if (used != cell.size()) throw std::invalid_argument(cell);
        } catch (const std::exception&) {
            throw mml::InputError("--coords: '" + cell + "' is not a number");
        }
    }
    if (v.size() != 3) throw mml::InputError("--coords expects x,y,z");
    return {v[0], v[1], v[2]};
}

mml::RepSpec rep_spec(const Options& o) {
    if (!o.spec.empty()) return mml::load_rep_spec(o.spec);
    if (o.coords.empty()) throw mml::InputError("one of --coords or --spec is required");
    mml::RepSpec spec;
    spec.coords = parse_coords(o.coords);
    if (o.deform == "zero") {
        spec.deformation = mml::ZeroDeformation{};
    } else if (o.deform == "path") {
        spec.deformation = mml::PathDeformation{{1.0, 1.0, 1.0}, o.h};
    } else if (o.deform == "tangent") {
        spec.deformation = mml::RandomTangentSpec{o.seed, 1.0};
    } else {
        throw mml::InputError("--deform must be path, tangent or zero");
    }
    return spec;
}

// Rejects representations outside the verified domain. A parabolic boundary
// is admitted only where the caller handles the cusp limit.
void require_valid(const mml::HoledTorusRep& rep, bool allow_cusp) {
    const mml::ValidationReport v = mml::validate_fuchsian(rep, kValidationDepth);
    if (v.ok) return;
    if (v.reason == "boundary-parabolic") {
        if (allow_cusp) return;
        throw mml::InputError("boundary parabolic (tr[A,B] = -2)");
    }
    std::ostringstream msg;
    msg << "representation is not a valid holed-torus Fuchsian group: " << v.reason;
    if (v.offending) msg << " at slope " << *v.offending;
    throw mml::InputError(msg.str());
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw mml::InputError("cannot write '" + o.out + "'");
    file << text;
}

std::string bins_csv(const mml::SeriesReport& r) {
    std::ostringstream os;
    os << "n,count,sum_d,sum_h,sum_deriv\r\n";
    for (const mml::BinSums& b : r.bins) {
        os << b.n << ',' << b.count << ',' << mml::format_number(b.sum_d) << ',' << mml::format_number(b.sum_h)
           << ',' << mml::format_number(b.sum_deriv) << "\r\n";
    }
    return os.str();
}

int finish_report(const Options& o, const mml::SeriesReport& r) {
    emit(o, o.format == "csv" ? bins_csv(r) : mml::to_json(r).dump(2) + "\n");
    std::cerr << r.kind << ": residual " << r.residual << ", bound " << std::max(r.tail_bound, r.tolerance)
              << ", N_max " << r.n_max << (r.pass ? " -> pass" : " -> FAIL") << '\n';
    return r.pass ? kExitOk : kExitResidual;
}

std::vector<mml::ImportedTerm> load_import(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw mml::InputError("cannot open import file '" + path + "'");
    try {
        return mml::read_imported_terms(in);
    } catch (const mml::InputError& e) {
        throw mml::InputError(path + ": " + e.what());
    }
}

int run_verify_mcshane(const Options& o) {
    if (!o.import_path.empty()) {
        const auto terms = load_import(o.import_path);
        return finish_report(o, mml::mcshane_sum_imported(terms, o.ell_boundary, o.tol));
    }
    const mml::HoledTorusRep rep = mml::realize(rep_spec(o));
    require_valid(rep, /*allow_cusp=*/true);
    return finish_report(o, mml::mcshane_sum(rep, o.tol, o.n_ceiling, mml::Exec::parallel));
}

int run_verify_margulis(const Options& o) {
    if (!o.import_path.empty()) {
        const auto terms = load_import(o.import_path);
        return finish_report(o, mml::margulis_residual_imported(terms, o.ell_boundary, o.alpha_boundary, o.tol));
    }
    const mml::HoledTorusRep rep = mml::realize(rep_spec(o));
    require_valid(rep, /*allow_cusp=*/false);
    return finish_report(o, mml::margulis_residual(rep, o.tol, o.n_ceiling, mml::Exec::parallel));
}

int run_census(const Options& o) {
    const mml::HoledTorusRep rep = mml::realize(rep_spec(o));
    require_valid(rep, /*allow_cusp=*/true);
    const mml::TailKind kind = rep.cusped() ? mml::TailKind::cusp : mml::TailKind::identity;
    const mml::CurveFamily fam = o.n_max ? mml::enumerate_bins(rep, *o.n_max, mml::Exec::parallel)
                                         : mml::enumerate_family(rep, o.tol, kind, o.n_ceiling, mml::Exec::parallel);
    if (o.format == "json") {
        json bins = json::array();
        for (const mml::CurveBin& b : fam.bins) bins.push_back({{"n", b.n}, {"count", b.members.size()}});
        emit(o, json{{"n_max", fam.n_max}, {"m_hat", fam.m_hat}, {"kappa_hat", fam.kappa_hat}, {"bins", bins}}
                        .dump(2) +
                    "\n");
    } else {
        std::ostringstream os;
        mml::write_census(os, fam);
        emit(o, os.str());
    }
    return kExitOk;
}

struct SweepCell {
    mml::TraceCoords coords;
    mml::DeformationRequest deformation;
    std::string label;
};

std::vector<mml::TraceCoords> sweep_triples(const Options& o) {
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> coord(o.lo, o.hi);
    std::vector<mml::TraceCoords> out;
    for (int guard = 0; static_cast<int>(out.size()) < o.triples; ++guard) {
        if (guard > 1000 * o.triples) throw mml::InputError("sweep: cannot draw valid triples in the given box");
        const mml::TraceCoords c{coord(rng), coord(rng), coord(rng)};
        if (c.x > 2.0 && mml::fricke_boundary_trace(c) < -2.0) out.push_back(c);
    }
    return out;
}

int run_sweep(const Options& o) {
    std::vector<SweepCell> cells;
    std::uint64_t cell_seed = o.seed;
    for (const mml::TraceCoords& c : sweep_triples(o)) {
        cells.push_back({c, mml::PathDeformation{{1.0, 1.0, 1.0}, o.h}, "path"});
        for (int s = 0; s < o.seeds; ++s) {
            ++cell_seed;
            cells.push_back({c, mml::RandomTangentSpec{cell_seed, 1.0}, "random:" + std::to_string(cell_seed)});
        }
    }

    std::vector<json> results(cells.size());
    std::vector<int> passed(cells.size(), 0);
    const auto n = static_cast<std::ptrdiff_t>(cells.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(mml::worker_count())
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        json cell = {{"coords", {cells[k].coords.x, cells[k].coords.y, cells[k].coords.z}},
                     {"deformation", cells[k].label}};
        try {
            const mml::HoledTorusRep rep = mml::realize({cells[k].coords, cells[k].deformation});
            require_valid(rep, false);
            const mml::SeriesReport r = mml::margulis_residual(rep, o.tol, o.n_ceiling, mml::Exec::serial);
            const bool applicable = r.min_interior_alpha > r.tail_bound;
            cell["report"] = mml::to_json(r);
            cell["corollary_applicable"] = applicable;
            cell["corollary_holds"] = !applicable || r.alpha_boundary > 0.0;
            passed[k] = r.pass && (!applicable || r.alpha_boundary > 0.0);
        } catch (const std::exception& e) {
            cell["error"] = e.what();
        }
        results[k] = std::move(cell);
    }

    int pass_count = 0, applicable = 0;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        pass_count += passed[k];
        applicable += results[k].value("corollary_applicable", false);
    }
    const json doc = {{"cells", results},
                      {"pass_count", pass_count},
                      {"total", cells.size()},
                      {"corollary_applicable_cells", applicable}};
    emit(o, doc.dump(2) + "\n");
    std::cerr << "sweep: " << pass_count << "/" << cells.size() << " cells pass\n";
    return pass_count == static_cast<int>(cells.size()) ? kExitOk : kExitResidual;
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--coords", o.coords, "trace coordinates x,y,z");
    cmd->add_option("--spec", o.spec, "representation spec file (JSON)");
    cmd->add_option("--deform", o.deform, "deformation: path, tangent or zero")
        ->check(CLI::IsMember({"path", "tangent", "zero"}));
    cmd->add_option("--h", o.h, "finite-difference step for path deformations")->check(CLI::PositiveNumber);
    cmd->add_option("--tol", o.tol, "tail tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--n-ceiling", o.n_ceiling, "largest bin index N_max may reach")->check(CLI::Range(1, 100000));
    cmd->add_option("--seed", o.seed, "seed for random tangent deformations");
    cmd->add_option("--out", o.out, "output path (default stdout)");
    cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of the McShane and Margulis-invariant identities on holed tori"};
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);
    Options o;

    auto* mcshane = app.add_subcommand("verify-mcshane", "sum the length identity and compare with the boundary length");
    auto* margulis = app.add_subcommand("verify-margulis", "check the differentiated identity for Margulis invariants");
    for (auto* cmd : {mcshane, margulis}) {
        add_common(cmd, o);
        cmd->add_option("--import", o.import_path, "curve-pair CSV (ell_gamma1,ell_gamma2,alpha_gamma1,alpha_gamma2)");
        cmd->add_option("--ell-boundary", o.ell_boundary, "boundary length for --import");
        cmd->add_option("--alpha-boundary", o.alpha_boundary, "boundary Margulis invariant for --import");
    }
    auto* census = app.add_subcommand("census", "export the simple closed curves and their bins");
    add_common(census, o);
    census->add_option("--n-max", o.n_max, "fixed N_max (default: chosen by --tol)")->check(CLI::NonNegativeNumber);
    auto* sweep = app.add_subcommand("sweep", "verify the Margulis identity over a grid of representations");
    add_common(sweep, o);
    sweep->add_option("--triples", o.triples, "number of coordinate triples")->check(CLI::PositiveNumber);
    sweep->add_option("--seeds", o.seeds, "random tangent deformations per triple")->check(CLI::NonNegativeNumber);
    sweep->add_option("--lo", o.lo, "lower corner of the coordinate box");
    sweep->add_option("--hi", o.hi, "upper corner of the coordinate box");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }
    if (census->parsed() && !census->count("--format")) o.format = "csv";

    try {
        if (mcshane->parsed()) return run_verify_mcshane(o);
        if (margulis->parsed()) return run_verify_margulis(o);
        if (census->parsed()) return run_census(o);
        return run_sweep(o);
    } catch (const mml::NonConvergence& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNonConvergence;
    } catch (const mml::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
}
