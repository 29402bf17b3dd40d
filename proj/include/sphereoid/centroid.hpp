#pragma once

// Discrete and continuous centroids, spherical and weighted-Euclidean, plus
// the projection identity that computes the spherical ones through the chart.

#include <functional>
#include <vector>

#include "sphereoid/chart.hpp"
#include "sphereoid/convex.hpp"
#include "sphereoid/spherical_body.hpp"

namespace sphereoid {

/// c_s(u_1,...,u_N) = sum u_i / |sum u_i|; throws CentroidUndefined when
/// the sum vanishes.
UnitVector c_s_discrete(const std::vector<UnitVector>& points);

using WeightFn = std::function<double(const ChartPoint&)>;

/// f-weighted average of chart points.
ChartPoint c_f_discrete(const std::vector<ChartPoint>& points, const WeightFn& f);

/// mu-centroid of L intersected with a halfspace through the origin
/// (offset must be 0; the halfspace keeps {x : normal . x <= 0}).
ChartPoint c_mu_region(const EuclidBody& body, const HalfSpace& half,
                       const WeightedDensity& density);

/// Spherical centroid of K cut by the hemisphere S_u^+ whose center u lies
/// on the equator of K's center; u is given by its chart coordinates
/// (a unit n-vector in the frame basis). Computed through the chart as
/// unproject(c_tau_hat(image cut by the halfspace)).
UnitVector c_s_region(const SphericalBody& k, const Vec& hemisphere_normal);

}  // namespace sphereoid
