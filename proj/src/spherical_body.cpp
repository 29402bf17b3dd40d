#include "sphereoid/spherical_body.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sphereoid/errors.hpp"

namespace sphereoid {

namespace {
constexpr double kPi = std::numbers::pi;
// Proper bodies must stay away from the equator of the center's hemisphere.
constexpr double kMaxImageNorm = 1e6;  // tan(pi/2 - 1e-6), within rounding
}

SphericalBody::SphericalBody(TangentFrame frame, EuclidBody image)
    : frame_(std::move(frame)), image_(std::move(image)) {
    if (static_cast<int>(frame_.basis().size()) != image_.dim())
        throw std::invalid_argument("SphericalBody: frame/image dimension mismatch");
    if (image_.max_vertex_norm() >= kMaxImageNorm)
        throw std::invalid_argument("SphericalBody: image not proper (touches the equator)");
    const double scl = std::max(1.0, image_.max_vertex_norm());
    if (!image_.is_origin_symmetric(1e-9 * scl))
        throw std::invalid_argument("SphericalBody: image not origin-symmetric");
    if (!image_.degenerate && image_.vertices.size() < 3)
        throw std::invalid_argument("SphericalBody: image has empty interior");
}

double SphericalBody::circumradius() const {
    return std::atan(image_.max_vertex_norm());
}

SphericalBody cap_body(const UnitVector& e, double radius, int m) {
    if (!(radius > 0.0) || radius >= kPi / 2.0)
        throw std::invalid_argument("cap_body: radius must lie in (0, pi/2)");
    return SphericalBody(TangentFrame::at(e), regular_polygon(m, std::tan(radius)));
}

bool body_contains(const SphericalBody& k, const UnitVector& u, double tol) {
    const double c = dot(u.coords(), k.center().coords());
    if (c <= kHemisphereMargin) return false;
    return contains(k.image(), project(k.frame(), u), tol);
}

std::vector<UnitVector> body_boundary_samples(const SphericalBody& k, int m) {
    if (k.image().dim() != 2)
        throw std::invalid_argument("body_boundary_samples: n = 2 only");
    PolygonRays rays(k.image());
    std::vector<UnitVector> out;
    out.reserve(m);
    for (int i = 0; i < m; ++i) {
        const double t = 2.0 * kPi * i / m;
        const double r = rays.rho(t);
        out.push_back(unproject(k.frame(), ChartPoint{r * std::cos(t), r * std::sin(t)}));
    }
    return out;
}

SphericalBody rotate_spherical_body(const Rotation& rot, const SphericalBody& k) {
    // Rotate the frame rigidly; chart coordinates are unchanged.
    std::vector<Vec> basis;
    basis.reserve(k.frame().basis().size());
    for (const Vec& b : k.frame().basis()) basis.push_back(rot.apply(b));
    TangentFrame f(rot.apply(k.center()), std::move(basis));
    return SphericalBody(std::move(f), k.image());
}

}  // namespace sphereoid
