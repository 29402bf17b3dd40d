#pragma once

// Proper, centrally-symmetric spherical convex bodies, represented by their
// gnomonic image in a tangent frame at the symmetry center.

#include <optional>
#include <vector>

#include "sphereoid/chart.hpp"
#include "sphereoid/convex.hpp"
#include "sphereoid/sphere.hpp"

namespace sphereoid {

class SphericalBody {
public:
    SphericalBody(TangentFrame frame, EuclidBody image);

    const TangentFrame& frame() const { return frame_; }
    const UnitVector& center() const { return frame_.center(); }
    const EuclidBody& image() const { return image_; }
    bool degenerate() const { return image_.degenerate; }

    /// Geodesic circumradius about the center: max arctan |vertex|.
    double circumradius() const;

private:
    TangentFrame frame_;
    EuclidBody image_;
};

/// Cap C_r(e) as a spherical body: regular m-gon image of circumradius tan r.
SphericalBody cap_body(const UnitVector& e, double radius, int m = 720);

bool body_contains(const SphericalBody& k, const UnitVector& u, double tol = 1e-12);

/// m boundary samples, evenly spaced in chart angle (n = 2).
std::vector<UnitVector> body_boundary_samples(const SphericalBody& k, int m);

SphericalBody rotate_spherical_body(const Rotation& rot, const SphericalBody& k);

}  // namespace sphereoid
