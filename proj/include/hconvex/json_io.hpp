#pragma once

#include <string>

#include <json.hpp>

#include "hconvex/body.hpp"
#include "hconvex/width.hpp"

// Body and witness serialization.
//
// Body schema:
//   { "dim": d, "kind": "polytope" | "arc-polygon",
//     "vertices": [[x0..xd], ...],
//     "arcs": [{"center": [...], "radius": r, "start": [...], "end": [...]}, ...] }
// Coordinates are hyperboloid-model reals; readers re-normalize and validate.
// Arc-polygons are stored as the counterclockwise chain of boundary arcs;
// a full circle is a single arc with start == end.

namespace hconvex {

using ojson = nlohmann::ordered_json;

ojson body_to_json(const ConvexBody& body);
ConvexBody body_from_json(const ojson& j);

void save_body(const ConvexBody& body, const std::string& path);
ConvexBody load_body(const std::string& path);

// { "normal": [...], "value": r, "farthest": [[...]], "contact": [[...]] }
ojson witness_to_json(const WidthWitness& w);

} // namespace hconvex
