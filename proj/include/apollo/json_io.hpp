#pragma once

#include <json.hpp>

#include "apollo/packing.hpp"
#include "apollo/quadruples.hpp"
#include "apollo/triples.hpp"

namespace apollo {

using nlohmann::json;

/// Conversion guard: the JSON layer carries plain integers, so values beyond
/// 64 bits are rejected rather than silently truncated.
long long json_int(const Int& v);

json to_json(const DiskSymbol& d);
DiskSymbol disk_from_json(const json& j);

json to_json(const Spinor& u);
json to_json(const CurvatureTriple& t);
json to_json(const DescartesQuadruple& v);
json to_json(const GeoQuadruple& g);
json to_json(const QuadMove& mv);
json to_json(const MoveChain& chain);
json to_json(const Packing& p);

DescartesQuadruple quad_from_json(const json& j);

}  // namespace apollo
