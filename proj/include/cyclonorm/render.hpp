#pragma once

// Text, JSON and CSV forms of triangles, polynomials and rarefaction reports.
// JSON keys keep insertion order so output is byte-stable.

#include <string>

#include <json.hpp>

#include "cyclonorm/norm_poly.hpp"
#include "cyclonorm/rarefaction.hpp"
#include "cyclonorm/triangle.hpp"

namespace cyclonorm {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSourceMarker = "♦";

/// {p, i1, i2, rows: [[entry, ...], ...], sources: [[n1, n2], ...]}; entries
/// are decimal strings, row n listed by n2 ascending.
Json triangle_json(const Triangle& t);

/// Header n1,n2,value,is_source; one line per entry in row order.
std::string triangle_csv(const Triangle& t);

/// Centered layout, every cell the same width, sources tagged with the marker.
std::string triangle_pretty(const Triangle& t);

/// Parses triangle_json output back into a triangle (sources are recomputed
/// and checked against the listed ones).
Triangle triangle_from_json(const Json& j);

/// {p, i1, i2, terms: [{n0, n1, n2, c}, ...]} with c a decimal string.
Json polynomial_json(const NormPolynomial& poly);

Json report_json(const RarefactionReport& report);

/// Header N,S.
std::string checkpoints_csv(const std::vector<Checkpoint>& checkpoints);

} // namespace cyclonorm
