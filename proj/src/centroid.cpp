#include "sphereoid/centroid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sphereoid/errors.hpp"
#include "sphereoid/polar_table.hpp"

namespace sphereoid {

namespace {
constexpr double kPi = std::numbers::pi;
}

UnitVector c_s_discrete(const std::vector<UnitVector>& points) {
    if (points.empty()) throw CentroidUndefined("c_s: empty point set");
    Vec s(points[0].ambient_dim(), 0.0);
    for (const UnitVector& u : points) add_in_place(s, u.coords());
    if (norm(s) <= 1e-12) throw CentroidUndefined("c_s: vanishing vector sum");
    return UnitVector(normalized(s));
}

ChartPoint c_f_discrete(const std::vector<ChartPoint>& points, const WeightFn& f) {
    if (points.empty()) throw std::invalid_argument("c_f: empty point set");
    Vec s(points[0].size(), 0.0);
    double wsum = 0.0;
    for (const ChartPoint& x : points) {
        const double w = f(x);
        if (!(w > 0.0)) throw std::invalid_argument("c_f: weights must be positive");
        add_in_place(s, x, w);
        wsum += w;
    }
    return scale(s, 1.0 / wsum);
}

ChartPoint c_mu_region(const EuclidBody& body, const HalfSpace& half,
                       const WeightedDensity& density) {
    if (std::abs(half.offset) > 1e-15)
        throw std::invalid_argument("c_mu_region: halfspace must pass through the origin");
    if (body.dim() == 2) {
        PolarTable table(body, density);
        // Region {normal . x <= 0} in polar coordinates: a half-turn arc.
        const double beta = std::atan2(half.normal[1], half.normal[0]);
        const double mass = table.mass_between(beta + kPi / 2.0, beta + 3.0 * kPi / 2.0);
        if (mass <= 1e-12) throw MeasureTooSmall("c_mu_region: region measure too small");
        const Vec mom = table.moment_between(beta + kPi / 2.0, beta + 3.0 * kPi / 2.0);
        return scale(mom, 1.0 / mass);
    }
    // n >= 3: quasi-uniform angular grid.
    const int n = body.dim();
    const DirectionGrid g = DirectionGrid::make(n, n == 3 ? 2000 : 4000);
    double mass = 0.0;
    Vec mom(n, 0.0);
    for (const Vec& v : g.directions) {
        if (dot(half.normal, v) > 0.0) continue;
        const double rho = radial(body, v);
        mass += radial_primitive(density, n - 1, rho);
        add_in_place(mom, v, radial_primitive(density, n, rho));
    }
    if (mass <= 1e-12) throw MeasureTooSmall("c_mu_region: region measure too small");
    return scale(mom, 1.0 / mass);
}

UnitVector c_s_region(const SphericalBody& k, const Vec& hemisphere_normal) {
    // K cut by S_u^+ projects to the image cut by {x : u . x >= 0}.
    const WeightedDensity tau_hat{DensityKind::psi, k.image().dim()};
    const ChartPoint c =
        c_mu_region(k.image(), HalfSpace(scale(hemisphere_normal, -1.0)), tau_hat);
    return unproject(k.frame(), c);
}

}  // namespace sphereoid
