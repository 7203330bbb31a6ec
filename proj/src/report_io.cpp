#include "mml/report_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mml {

using nlohmann::json;

namespace {

std::string line_context(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

double number_field(const json& obj, const char* key) {
    if (!obj.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    if (!obj[key].is_number()) throw InputError(std::string("field '") + key + "' must be a number");
    return obj[key].get<double>();
}

RealMatrix2 matrix_field(const json& obj, const char* key) {
    if (!obj.contains(key)) throw InputError(std::string("missing matrix '") + key + "'");
    const json& m = obj[key];
    const bool shape_ok = m.is_array() && m.size() == 2 && m[0].is_array() && m[0].size() == 2 &&
                          m[1].is_array() && m[1].size() == 2;
    if (!shape_ok) throw InputError(std::string("matrix '") + key + "' must be [[a, b], [c, d]]");
    for (const auto& row : m) {
        for (const auto& v : row) {
            if (!v.is_number()) throw InputError(std::string("matrix '") + key + "' has a non-numeric entry");
        }
    }
    return {m[0][0].get<double>(), m[0][1].get<double>(), m[1][0].get<double>(), m[1][1].get<double>()};
}

DeformationRequest parse_deformation(const json& d) {
    if (!d.is_object()) throw InputError("'deformation' must be an object");
    const std::string kind = d.value("kind", std::string("zero"));
    if (kind == "zero") return ZeroDeformation{};
    if (kind == "path") {
        PathDeformation path;
        if (d.contains("path_coeffs")) {
            const json& c = d["path_coeffs"];
            if (!c.is_array() || c.size() != 3) throw InputError("'path_coeffs' must be [dx, dy, dz]");
            for (std::size_t i = 0; i < 3; ++i) {
                if (!c[i].is_number()) throw InputError("'path_coeffs' entries must be numbers");
                path.direction[i] = c[i].get<double>();
            }
        }
        if (d.contains("h")) path.h = number_field(d, "h");
        return path;
    }
    if (kind == "tangent") {
        if (!d.contains("tangent_matrices")) throw InputError("tangent deformation needs 'tangent_matrices'");
        const json& t = d["tangent_matrices"];
        return TangentDeformation{matrix_field(t, "a"), matrix_field(t, "b")};
    }
    if (kind == "random") {
        RandomTangentSpec r;
        if (d.contains("seed")) {
            if (!d["seed"].is_number_unsigned()) throw InputError("'seed' must be a nonnegative integer");
            r.seed = d["seed"].get<std::uint64_t>();
        }
        if (d.contains("scale")) r.scale = number_field(d, "scale");
        return r;
    }
    throw InputError("unknown deformation kind '" + kind + "'");
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    const auto last = s.find_last_not_of(" \t\r");
    return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

} // namespace

RepSpec parse_rep_spec(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("spec parse error at " + line_context(text, e.byte > 0 ? e.byte - 1 : 0) + ": " +
                         e.what());
    }
    if (!doc.is_object()) throw InputError("spec must be a JSON object");
    RepSpec spec;
    spec.coords = {number_field(doc, "x"), number_field(doc, "y"), number_field(doc, "z")};
    if (doc.contains("deformation")) spec.deformation = parse_deformation(doc["deformation"]);
    return spec;
}

RepSpec load_rep_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open spec file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_rep_spec(buffer.str());
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

HoledTorusRep realize(const RepSpec& spec) {
    const HoledTorusRep base = build_rep(spec.coords);
    return std::visit(
        [&](const auto& d) -> HoledTorusRep {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, RandomTangentSpec>) {
                HoledTorusRep rep = attach_deformation(base, random_tangent(base, d.seed, d.scale));
                rep.deformation_label = "random:" + std::to_string(d.seed);
                return rep;
            } else {
                return attach_deformation(base, d);
            }
        },
        spec.deformation);
}

std::string format_number(double v) {
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

json to_json(const SeriesReport& r) {
    json bins = json::array();
    for (const BinSums& b : r.bins) {
        bins.push_back({{"n", b.n}, {"count", b.count}, {"sum_d", b.sum_d}, {"sum_deriv", b.sum_deriv},
                        {"sum_h", b.sum_h}});
    }
    json out = {
        {"kind", r.kind},
        {"target", r.target},
        {"partial_sum", r.partial_sum},
        {"residual", r.residual},
        {"n_max", r.n_max},
        {"tail_bound", r.tail_bound},
        {"m_hat", r.m_hat},
        {"kappa_hat", r.kappa_hat},
        {"h_partial_sum", r.h_partial_sum},
        {"h_threshold_n", r.h_threshold_n ? json(*r.h_threshold_n) : json(nullptr)},
        {"bins", std::move(bins)},
        {"lhs", r.lhs},
        {"min_interior_alpha", r.min_interior_alpha},
        {"rhs", r.rhs},
        {"ell_boundary", r.ell_boundary},
        {"alpha_boundary", r.alpha_boundary},
        {"tail_bound_identity", r.tail_bound_identity},
        {"tail_bound_derivative", r.tail_bound_derivative},
        {"tail_label", r.tail_label},
        {"tolerance", r.tolerance},
        {"pass", r.pass},
        {"deformation", r.deformation},
    };
    if (r.coords) out["coords"] = {r.coords->x, r.coords->y, r.coords->z};
    return out;
}

void write_census(std::ostream& os, const CurveFamily& family) {
    os << "slope_p,slope_q,word,trace,length,bin\r\n";
    for (const CurveBin& bin : family.bins) {
        for (const CurveClass& c : bin.members) {
            os << c.slope.p << ',' << c.slope.q << ',' << c.word << ',' << format_number(c.trace.re) << ','
               << format_number(c.length) << ',' << bin.n << "\r\n";
        }
    }
    os << "summary,,m_hat,," << format_number(family.m_hat) << ',' << family.n_max << "\r\n";
}

std::vector<ImportedTerm> read_imported_terms(std::istream& is) {
    static const std::vector<std::string> kHeader{"ell_gamma1", "ell_gamma2", "alpha_gamma1", "alpha_gamma2"};
    std::string line;
    if (!std::getline(is, line)) throw InputError("import: empty file");
    if (split_csv(line) != kHeader) {
        throw InputError("import line 1: header must be ell_gamma1,ell_gamma2,alpha_gamma1,alpha_gamma2");
    }
    std::vector<ImportedTerm> terms;
    for (int lineno = 2; std::getline(is, line); ++lineno) {
        if (trim(line).empty()) continue;
        const auto cells = split_csv(line);
        if (cells.size() != 4) {
            throw InputError("import line " + std::to_string(lineno) + ": expected 4 columns, got " +
                             std::to_string(cells.size()));
        }
        std::array<double, 4> v{};
        for (std::size_t i = 0; i < 4; ++i) {
            const std::string& cell = cells[i];
            const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v[i]);
            if (ec != std::errc() || ptr != cell.data() + cell.size() || cell.empty()) {
                throw InputError("import line " + std::to_string(lineno) + ": '" + cell + "' is not a number");
            }
        }
        terms.push_back({v[0], v[1], v[2], v[3]});
    }
    return terms;
}

} // namespace mml
