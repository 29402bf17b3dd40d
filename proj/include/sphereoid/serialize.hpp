#pragma once

#include <json.hpp>

#include "sphereoid/chart.hpp"
#include "sphereoid/convex.hpp"
#include "sphereoid/spherical_body.hpp"

namespace sphereoid {

using json = nlohmann::json;

json to_json(const UnitVector& u);
UnitVector unit_vector_from_json(const json& j);

json to_json(const SphericalCap& c);
SphericalCap cap_from_json(const json& j);

json to_json(const TangentFrame& f);
TangentFrame frame_from_json(const json& j);

json to_json(const EuclidBody& b);
EuclidBody euclid_body_from_json(const json& j);

/// {"center": [...], "image": {...}}; the frame is rebuilt canonically.
json to_json(const SphericalBody& k);
SphericalBody spherical_body_from_json(const json& j);

}  // namespace sphereoid
