#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/arith.hpp"
#include "toric/divisor.hpp"
#include "toric/fan.hpp"
#include "toric/mirror.hpp"
#include "toric/polytope.hpp"
#include "toric/secondary.hpp"

namespace toric::json_io {

using Json = nlohmann::ordered_json;

/// Integers fitting in 64 bits are numbers, wider ones decimal strings. Readers accept both.
Json to_json(const Integer& x);
Json to_json(const Rational& x);  // integer, or "p/q" string
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Json to_json(const std::vector<IntVector>& vs);
Json to_json(const std::vector<std::vector<std::size_t>>& index_lists);

Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j, std::size_t expected_size);
std::vector<IntVector> int_vectors_from_json(const Json& j, std::size_t expected_size);
RatVector rat_vector_from_json(const Json& j);

/// {"lattice":"M"|"N","rank":n,"vertices":[...]}; facets are added when requested.
Json polytope_to_json(const LatticePolytope& P, bool with_facets);
LatticePolytope polytope_from_json(const Json& j);

/// {"lattice":"N","rank":n,"rays":[...],"max_cones":[...]}
Json fan_to_json(const Fan& fan);
Fan fan_from_json(const Json& j);
bool is_fan_json(const Json& j);

/// {"coefficients":{"<ray index>":k,...}}; unlisted rays get coefficient zero.
IntVector divisor_from_json(const Json& j, std::size_t ray_count);
Json divisor_to_json(const IntVector& coefficients);

/// {"free":[...],"torsion":[...]}
Json class_to_json(const DivisorClass& c);

/// Class coordinates list the free part followed by the torsion part of each entry.
Json correspondence_to_json(const Correspondence& c);

/// {"cells":[...],"cone":{"inequalities":[...]},"phase":"geometric"|"other"}
Json chamber_to_json(const Chamber& c);

/// Compact single-line rendering with a trailing newline.
std::string render(const Json& j);

}  // namespace toric::json_io
