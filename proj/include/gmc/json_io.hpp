#pragma once

#include <string>
#include <string_view>

#include "gmc/bounds.hpp"
#include "gmc/decomp_graph.hpp"

namespace gmc {

// Parses the decomposition graph document
//   {"vertices":[{"id":..,"g":..,"fibres":[[p,q],..],"b":..},..],
//    "edges":[{"id":..,"from":..,"to":..,"matrix":[[a,b],[c,d]]},..]}
// Every number must be an integer literal that fits in int64; unknown keys,
// missing keys, empty or duplicate ids and dangling endpoints are errors.
// Throws ParseError.
DecompositionGraph parse_graph(std::string_view text);

// Canonical serialization: sections and ids in sorted order, fixed key order,
// two-space indentation, trailing newline.
std::string serialize_graph(const DecompositionGraph& g);

// Structured rendering of a report, terms in fixed order (cycle, Phi,
// edges by id, vertices by id) followed by the witness.
std::string report_to_json(const BoundReport& r);

}  // namespace gmc
