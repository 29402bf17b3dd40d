#include "sphereoid/serialize.hpp"

namespace sphereoid {

json to_json(const UnitVector& u) { return json(u.coords()); }

UnitVector unit_vector_from_json(const json& j) {
    return UnitVector(j.get<Vec>());
}

json to_json(const SphericalCap& c) {
    return json{{"center", to_json(c.center)}, {"radius", c.radius}};
}

SphericalCap cap_from_json(const json& j) {
    return SphericalCap(unit_vector_from_json(j.at("center")), j.at("radius").get<double>());
}

json to_json(const TangentFrame& f) {
    return json{{"center", to_json(f.center())}, {"basis", f.basis()}};
}

TangentFrame frame_from_json(const json& j) {
    return TangentFrame(unit_vector_from_json(j.at("center")),
                        j.at("basis").get<std::vector<Vec>>());
}

json to_json(const EuclidBody& b) {
    json j{{"vertices", b.vertices}, {"symmetric", b.symmetric}};
    if (b.degenerate) j["degenerate"] = true;
    return j;
}

EuclidBody euclid_body_from_json(const json& j) {
    EuclidBody b;
    b.vertices = j.at("vertices").get<std::vector<Vec>>();
    b.symmetric = j.value("symmetric", false);
    b.degenerate = j.value("degenerate", false);
    return b;
}

json to_json(const SphericalBody& k) {
    return json{{"center", to_json(k.center())}, {"image", to_json(k.image())}};
}

SphericalBody spherical_body_from_json(const json& j) {
    const UnitVector e = unit_vector_from_json(j.at("center"));
    return SphericalBody(TangentFrame::at(e), euclid_body_from_json(j.at("image")));
}

}  // namespace sphereoid
