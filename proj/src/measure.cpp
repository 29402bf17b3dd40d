#include "sphereoid/measure.hpp"

#include <cmath>
#include <numbers>

#include "sphereoid/errors.hpp"
#include "sphereoid/polar_table.hpp"

namespace sphereoid {

namespace {

constexpr double kPi = std::numbers::pi;

// Closed-form polygon masses in n = 2. Per edge with outward unit normal at
// angle beta and offset a, substituting u = theta - beta gives rho = a / cos u
// with u confined to (-pi/2, pi/2), and the radial primitives integrate in
// elementary terms:
//   lebesgue: int rho^2/2            = a^2 tan(u) / 2
//   xi:       int 1 - (1+rho^2)^-1/2 = u - asin(sin u / sqrt(1 + a^2))
//   psi:      int rho^2/(2(1+rho^2)) = (a / (2 sqrt(1+a^2)))
//                                       * atan(a tan u / sqrt(1 + a^2))
double edge_mass_closed_form(DensityKind kind, double a, double u1, double u2) {
    switch (kind) {
        case DensityKind::lebesgue:
            return 0.5 * a * a * (std::tan(u2) - std::tan(u1));
        case DensityKind::xi: {
            const double s = std::sqrt(1.0 + a * a);
            return (u2 - u1) - (std::asin(std::sin(u2) / s) - std::asin(std::sin(u1) / s));
        }
        case DensityKind::psi: {
            const double s = std::sqrt(1.0 + a * a);
            return 0.5 * (a / s) *
                   (std::atan(a * std::tan(u2) / s) - std::atan(a * std::tan(u1) / s));
        }
        default:
            throw std::invalid_argument("edge_mass_closed_form: unsupported density");
    }
}

double polygon_mass_closed_form(const EuclidBody& body, DensityKind kind) {
    double total = 0.0;
    const std::size_t m = body.vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Vec& p = body.vertices[i];
        const Vec& q = body.vertices[(i + 1) % m];
        Vec edge = sub(q, p);
        const double en = norm(edge);
        if (en < 1e-300) continue;
        const Vec nrm{edge[1] / en, -edge[0] / en};
        const double a = dot(nrm, p);
        if (a <= 0.0) throw OriginNotInterior("polygon mass: origin not interior");
        // Signed angles of the endpoints about the edge normal.
        const double u1 = std::atan2(cross2(nrm, p), dot(nrm, p));
        const double u2 = std::atan2(cross2(nrm, q), dot(nrm, q));
        total += edge_mass_closed_form(kind, a, u1, u2);
    }
    return total;
}

}  // namespace

double unit_sphere_area(int d) {
    return 2.0 * std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d);
}

double measure_chart_body(const EuclidBody& body, const WeightedDensity& d) {
    const int n = body.dim();
    if (n != d.dim) throw std::invalid_argument("measure_chart_body: dimension mismatch");
    if (n == 2) {
        if (d.kind != DensityKind::phi && !body.degenerate && body.vertices.size() >= 3)
            return polygon_mass_closed_form(body, d.kind);
        return PolarTable(body, d).total_mass();
    }
    const DirectionGrid g = DirectionGrid::make(n, n == 3 ? 2000 : 4000);
    double s = 0.0;
    for (const Vec& v : g.directions)
        s += radial_primitive(d, n - 1, radial(body, v));
    return s * unit_sphere_area(n) / static_cast<double>(g.directions.size());
}

double sigma_body(const SphericalBody& k) {
    return measure_chart_body(k.image(), WeightedDensity{DensityKind::xi, k.image().dim()});
}

double tau_body(const SphericalBody& k) {
    return measure_chart_body(k.image(), WeightedDensity{DensityKind::psi, k.image().dim()});
}

double cap_sigma(double radius, int n) {
    const WeightedDensity xi{DensityKind::xi, n};
    return unit_sphere_area(n) * radial_primitive(xi, n - 1, std::tan(radius));
}

double cap_tau(double radius, int n) {
    const WeightedDensity psi{DensityKind::psi, n};
    return unit_sphere_area(n) * radial_primitive(psi, n - 1, std::tan(radius));
}

MatchedCap match_cap(const SphericalBody& k, SphereMeasure which) {
    const int n = k.image().dim();
    const double target = (which == SphereMeasure::sigma) ? sigma_body(k) : tau_body(k);
    const double hemi = (which == SphereMeasure::sigma) ? cap_sigma(kPi / 2.0 - 1e-9, n)
                                                        : cap_tau(kPi / 2.0 - 1e-9, n);
    if (!(target > 0.0) || target >= hemi)
        throw TargetOutOfRange("match_cap: target measure outside the proper-cap range");
    double r;
    if (n == 2) {
        r = (which == SphereMeasure::sigma)
                ? std::acos(1.0 - target / (2.0 * kPi))
                : std::asin(std::sqrt(target / kPi));
    } else {
        double lo = 1e-12, hi = kPi / 2.0 - 1e-9;
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double v = (which == SphereMeasure::sigma) ? cap_sigma(mid, n) : cap_tau(mid, n);
            (v < target ? lo : hi) = mid;
        }
        r = 0.5 * (lo + hi);
    }
    const double got = (which == SphereMeasure::sigma) ? cap_sigma(r, n) : cap_tau(r, n);
    return MatchedCap{SphericalCap(k.center(), r), which, got - target};
}

MatchedBall match_ball(const EuclidBody& body, const WeightedDensity& d) {
    const int n = body.dim();
    const double target = measure_chart_body(body, d);
    auto ball_mass = [&](double r) {
        return unit_sphere_area(n) * radial_primitive(d, n - 1, r);
    };
    if (!(target > 0.0) || target >= ball_mass(1e6))
        throw TargetOutOfRange("match_ball: target exceeds the density's reachable mass");
    double r;
    if (n == 2 && d.kind != DensityKind::phi) {
        switch (d.kind) {
            case DensityKind::lebesgue:
                r = std::sqrt(target / kPi);
                break;
            case DensityKind::xi: {
                // 2 pi (1 - 1/sqrt(1+r^2)) = target
                const double c = 1.0 - target / (2.0 * kPi);
                r = std::sqrt(1.0 / (c * c) - 1.0);
                break;
            }
            default: {  // psi: pi r^2/(1+r^2) = target
                const double q = target / kPi;
                r = std::sqrt(q / (1.0 - q));
                break;
            }
        }
    } else {
        double lo = 1e-12, hi = 1e6;
        for (int it = 0; it < 200; ++it) {
            const double mid = std::sqrt(lo * hi);  // log bisection over the wide bracket
            (ball_mass(mid) < target ? lo : hi) = mid;
        }
        r = std::sqrt(lo * hi);
    }
    return MatchedBall{r, d, ball_mass(r) - target};
}

}  // namespace sphereoid
