#pragma once

// Evaluation of sigma / tau on spherical bodies, their chart push-forwards
// on Euclidean bodies, and the measure-matching cap/ball constructions.

#include "sphereoid/chart.hpp"
#include "sphereoid/convex.hpp"
#include "sphereoid/spherical_body.hpp"

namespace sphereoid {

enum class SphereMeasure { sigma, tau };

/// Surface area of S^{d-1} in R^d.
double unit_sphere_area(int d);

/// Integral of the density over the body, in polar coordinates.
/// Machine precision for n = 2, grid-accurate for n >= 3.
double measure_chart_body(const EuclidBody& body, const WeightedDensity& d);

double sigma_body(const SphericalBody& k);
double tau_body(const SphericalBody& k);

/// Closed-form cap measures through the chart (exact radial primitives).
double cap_sigma(double radius, int sphere_dim);
double cap_tau(double radius, int sphere_dim);

struct MatchedCap {
    SphericalCap cap;
    SphereMeasure matched;
    double residual;
};

struct MatchedBall {
    double radius;
    WeightedDensity density;
    double residual;
};

/// Cap centered at K's center with the same sigma- resp. tau-measure.
MatchedCap match_cap(const SphericalBody& k, SphereMeasure which);

/// Origin-centered ball with the same d-measure as L.
MatchedBall match_ball(const EuclidBody& body, const WeightedDensity& d);

}  // namespace sphereoid
