#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "mml/curves.hpp"
#include "mml/representation.hpp"
#include "mml/series.hpp"

namespace mml {

/// Random tangent deformation, resolved against the built representation.
struct RandomTangentSpec {
    std::uint64_t seed = 0;
    double scale = 1.0;
};

using DeformationRequest =
    std::variant<ZeroDeformation, PathDeformation, TangentDeformation, RandomTangentSpec>;

/// Contents of a representation spec file:
///
///   {"x": 4, "y": 4, "z": 4,
///    "deformation": {"kind": "zero" | "path" | "tangent" | "random",
///                    "path_coeffs": [dx, dy, dz], "h": 1e-4,
///                    "tangent_matrices": {"a": [[..],[..]], "b": [[..],[..]]},
///                    "seed": 7, "scale": 1.0}}
struct RepSpec {
    TraceCoords coords;
    DeformationRequest deformation = ZeroDeformation{};
};

/// Parse a spec document; InputError messages carry line:column context.
RepSpec parse_rep_spec(std::string_view text);
RepSpec load_rep_spec(const std::string& path);

/// Build the representation and attach the requested deformation.
HoledTorusRep realize(const RepSpec& spec);

/// Shortest round-trip decimal form of a double.
std::string format_number(double v);

nlohmann::json to_json(const SeriesReport& report);

/// Census CSV: slope_p,slope_q,word,trace,length,bin, one row per curve in bin
/// order, then a summary row `summary,,m_hat,,<m̂>,<N_max>`.
void write_census(std::ostream& os, const CurveFamily& family);

/// Import CSV with header ell_gamma1,ell_gamma2,alpha_gamma1,alpha_gamma2.
std::vector<ImportedTerm> read_imported_terms(std::istream& is);

} // namespace mml
