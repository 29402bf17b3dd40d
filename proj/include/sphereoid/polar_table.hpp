#pragma once

// Exact angular integration over a planar polygon in polar coordinates.
//
// For a CCW polygon with the origin interior and a radial density d, the
// quantities this project needs are all of the form
//     int_a^b  W(theta) * P_p(rho(theta)) dtheta,
// where P_p is the radial primitive of d at power p and W is 1, cos or sin.
// Within one edge rho(theta) is analytic, so per-edge Gauss panels plus
// prefix sums give machine-precision values at arbitrary angular bounds;
// the |u.v| kinks in centroid-body supports are handled by splitting at
// the exact sign-change angles instead of by brute-force ray counts.

#include "sphereoid/chart.hpp"
#include "sphereoid/convex.hpp"

namespace sphereoid {

class PolarTable {
public:
    PolarTable(const EuclidBody& body, const WeightedDensity& density);

    /// mu(L): full-circle integral of P_{n-1}(rho).
    double total_mass() const { return total_mass_; }

    /// Integral of P_{n-1}(rho) over angles [a, b], b - a <= 2 pi.
    double mass_between(double a, double b) const;

    /// Integral of (cos t, sin t) * P_n(rho) over [a, b].
    Vec moment_between(double a, double b) const;

    /// mu(L) * h(Gamma_mu L, u) for u at angle alpha:
    /// full-circle integral of |cos(t - alpha)| * P_n(rho).
    double weighted_support(double alpha) const;

    const PolygonRays& rays() const { return rays_; }

private:
    double segment(int which, double a, double b) const;  // within base window
    double fragment(int which, double a, double b) const;  // within one panel

    PolygonRays rays_;
    WeightedDensity density_;
    std::vector<double> bounds_;       // panel boundary angles, increasing
    std::vector<double> prefix_[3];    // cumulative integrals of g1, g2*cos, g2*sin
    double total_mass_ = 0.0;
    Vec total_moment_{0.0, 0.0};
};

}  // namespace sphereoid
