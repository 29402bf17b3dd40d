#pragma once

// The core constructions: discrete weighted centroid bodies Gamma_f,
// continuous Gamma_mu, the spherical centroid body Gamma_s, its discrete
// and point-cloud variants, and spherical polarity.

#include <vector>

#include "sphereoid/centroid.hpp"
#include "sphereoid/chart.hpp"
#include "sphereoid/convex.hpp"
#include "sphereoid/spherical_body.hpp"

namespace sphereoid {

/// Support value h(Gamma_f(x_1..x_N), u) = sum f_i |u . x_i| / sum f_i.
double gamma_f_support(const std::vector<ChartPoint>& points, const WeightFn& f,
                       const Vec& u);

/// Gamma_f as a body: hull of the 2^N sign-choice centroids for N <= 12,
/// zonotope vertex walk for larger N (n = 2). Throws DegenerateHull when the
/// points do not span R^n unless allow_degenerate is set, in which case a
/// flagged lower-dimensional body is returned.
EuclidBody gamma_f_discrete(const std::vector<ChartPoint>& points, const WeightFn& f,
                            bool allow_degenerate = false);

double gamma_mu_support(const EuclidBody& body, const WeightedDensity& d, const Vec& u);

EuclidBody gamma_mu_body(const EuclidBody& body, const WeightedDensity& d,
                         const DirectionGrid& grid);

/// All support values of Gamma_mu(body) on the grid (single quadrature table).
std::vector<double> gamma_mu_supports(const EuclidBody& body, const WeightedDensity& d,
                                      const DirectionGrid& grid);

/// Gamma_s K, computed in the chart as the psi-centroid body of the image.
SphericalBody gamma_s(const SphericalBody& k, const DirectionGrid& grid);

/// Discrete spherical centroid body of points in the open hemisphere of e.
SphericalBody gamma_se_discrete(const std::vector<UnitVector>& points, const UnitVector& e);

/// Point cloud of spherical centroids over the product of per-segment
/// geodesic samples of [u_i^e, u_i]. N <= 8 enforced.
std::vector<UnitVector> gamma_tilde_se(const std::vector<UnitVector>& points,
                                       const UnitVector& e, int per_segment);

/// Spherical polar body K*, centered at the antipode of K's center; its chart
/// image there is the Euclidean polar of K's image.
SphericalBody spherical_polar(const SphericalBody& k);

}  // namespace sphereoid
