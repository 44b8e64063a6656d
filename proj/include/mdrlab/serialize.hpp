#pragma once

// JSON encoding of the value types. Doubles are written with round-trip
// precision, so a decoded scenario reproduces the original bit for bit.
//
//   Vec3     -> [x, y, z]
//   Ket      -> [[re, im], ...]
//   Op       -> [[[re, im], ...], ...]   (row-major)
//   Scenario -> {"m", "a", "b", "n_p", "meter", "u13"}

#include <nlohmann/json.hpp>

#include "mdrlab/mdr.hpp"

namespace mdrlab {

using Json = nlohmann::ordered_json;

Json to_json(const Vec3 &v);
Json to_json(const Ket &k);
Json to_json(const Op &op);
Json to_json(const Scenario &s);

Vec3 vec3_from_json(const Json &j);
Ket ket_from_json(const Json &j);
/// Decoded as a general operator; pass `unitary = true` to check unitarity.
Op op_from_json(const Json &j, bool unitary = false);
Scenario scenario_from_json(const Json &j);

}  // namespace mdrlab
