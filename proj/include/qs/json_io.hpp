#pragma once

#include "qs/hypertoric.hpp"
#include "qs/matrix.hpp"
#include "qs/polyhedron.hpp"
#include "qs/quiver.hpp"
#include "qs/strata.hpp"

#include <json.hpp>

#include <string>

namespace qs {

// Insertion-ordered JSON keeps emitted reports byte-stable across round trips.
using Json = nlohmann::ordered_json;

Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

// Dimension vectors / characters serialize as {"label": value} objects in
// vertex order; rationals are canonical "p" / "p/q" strings.
Json dim_to_json(const Quiver& q, const DimVector& v);
DimVector dim_from_json(const Quiver& q, const Json& j);
Json char_to_json(const Quiver& q, const Character& c);
Character char_from_json(const Quiver& q, const Json& j);

Json framed_to_json(const FramedSetting& s);
FramedSetting framed_from_json(const Json& j);

Json rep_type_to_json(const Quiver& q, const RepresentationType& tau);
RepresentationType rep_type_from_json(const Quiver& q, const Json& j);

Json polyhedron_to_json(const Polyhedron& p);
Polyhedron polyhedron_from_json(const Json& j);

Json sign_vector_to_json(const Arrangement& arr, const SignVector& s);
Json chamber_to_json(const Arrangement& arr, const Chamber& ch);

Json matrix_to_json(const RatMat& m);

} // namespace qs
