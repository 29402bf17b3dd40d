#include "sphereoid/bodies.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sphereoid/errors.hpp"
#include "sphereoid/polar_table.hpp"

namespace sphereoid {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kSignEnumerationLimit = 12;

struct Generators {
    std::vector<Vec> gens;  // f_i x_i / sum f_i
    int rank = 0;
};

Generators make_generators(const std::vector<ChartPoint>& points, const WeightFn& f) {
    if (points.empty()) throw std::invalid_argument("gamma_f: empty point set");
    if (points.size() > (1u << 20)) throw ProductTooLarge("gamma_f: too many points");
    Generators g;
    double wsum = 0.0;
    for (const ChartPoint& x : points) {
        const double w = f(x);
        if (!(w > 0.0)) throw std::invalid_argument("gamma_f: weights must be positive");
        g.gens.push_back(scale(x, w));
        wsum += w;
    }
    for (Vec& v : g.gens) v = scale(v, 1.0 / wsum);
    // Linear span rank (Gamma_f is origin-symmetric).
    std::vector<Vec> basis;
    for (const Vec& v : g.gens) {
        Vec r = v;
        for (const Vec& b : basis) add_in_place(r, b, -dot(r, b));
        const double n = norm(r);
        if (n > 1e-12) basis.push_back(scale(r, 1.0 / n));
    }
    g.rank = static_cast<int>(basis.size());
    return g;
}

EuclidBody zonogon_walk(const std::vector<Vec>& gens) {
    // n = 2: orient every generator into the upper half-plane, sort by angle,
    // then trace one boundary chain and mirror it.
    std::vector<Vec> oriented;
    oriented.reserve(gens.size());
    for (const Vec& g : gens) {
        if (g[1] < 0.0 || (g[1] == 0.0 && g[0] < 0.0))
            oriented.push_back(scale(g, -1.0));
        else
            oriented.push_back(g);
    }
    std::sort(oriented.begin(), oriented.end(), [](const Vec& a, const Vec& b) {
        return std::atan2(a[1], a[0]) < std::atan2(b[1], b[0]);
    });
    Vec v(2, 0.0);
    for (const Vec& g : oriented) add_in_place(v, g, -1.0);
    std::vector<Vec> pts;
    pts.reserve(2 * oriented.size() + 2);
    pts.push_back(v);
    for (const Vec& g : oriented) {
        add_in_place(v, g, 2.0);
        pts.push_back(v);
    }
    const std::size_t chain = pts.size();
    for (std::size_t i = 0; i + 1 < chain; ++i) pts.push_back(scale(pts[i], -1.0));
    EuclidBody b = convex_hull(pts);
    b.symmetric = true;
    return b;
}

}  // namespace

double gamma_f_support(const std::vector<ChartPoint>& points, const WeightFn& f,
                       const Vec& u) {
    double num = 0.0, den = 0.0;
    for (const ChartPoint& x : points) {
        const double w = f(x);
        num += w * std::abs(dot(u, x));
        den += w;
    }
    return num / den;
}

EuclidBody gamma_f_discrete(const std::vector<ChartPoint>& points, const WeightFn& f,
                            bool allow_degenerate) {
    const Generators g = make_generators(points, f);
    const int dim = static_cast<int>(points[0].size());
    const std::size_t n = g.gens.size();
    if (g.rank < dim) {
        if (!allow_degenerate)
            throw DegenerateHull("gamma_f: points do not span R^n");
        if (g.rank == 0) {
            EuclidBody b;
            b.vertices = {Vec(dim, 0.0)};
            b.symmetric = true;
            b.degenerate = true;
            return b;
        }
        // All generators collinear: the body is a segment.
        Vec dir;
        for (const Vec& v : g.gens)
            if (norm(v) > 1e-12) { dir = normalized(v); break; }
        double extent = 0.0;
        for (const Vec& v : g.gens) extent += std::abs(dot(v, dir));
        EuclidBody b;
        b.vertices = {scale(dir, extent), scale(dir, -extent)};
        b.symmetric = true;
        b.degenerate = true;
        return b;
    }
    if (n <= kSignEnumerationLimit) {
        std::vector<Vec> pts;
        pts.reserve(std::size_t(1) << n);
        for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
            Vec s(dim, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                add_in_place(s, g.gens[i], (mask >> i) & 1 ? 1.0 : -1.0);
            pts.push_back(std::move(s));
        }
        EuclidBody b = convex_hull(pts);
        b.symmetric = true;
        return b;
    }
    if (dim == 2) return zonogon_walk(g.gens);
    // High N in n >= 3: reconstruct from the support formula on a grid.
    const DirectionGrid grid = DirectionGrid::make(dim, dim == 3 ? 2000 : 4000);
    std::vector<double> values;
    values.reserve(grid.directions.size());
    for (const Vec& u : grid.directions) values.push_back(gamma_f_support(points, f, u));
    return body_from_supports(grid, values);
}

double gamma_mu_support(const EuclidBody& body, const WeightedDensity& d, const Vec& u) {
    const int n = body.dim();
    if (n == 2) {
        PolarTable table(body, d);
        return table.weighted_support(std::atan2(u[1], u[0])) / table.total_mass();
    }
    const DirectionGrid g = DirectionGrid::make(n, n == 3 ? 2000 : 4000);
    double num = 0.0, den = 0.0;
    for (const Vec& v : g.directions) {
        const double rho = radial(body, v);
        num += std::abs(dot(u, v)) * radial_primitive(d, n, rho);
        den += radial_primitive(d, n - 1, rho);
    }
    return num / den;
}

std::vector<double> gamma_mu_supports(const EuclidBody& body, const WeightedDensity& d,
                                      const DirectionGrid& grid) {
    std::vector<double> values;
    values.reserve(grid.directions.size());
    if (body.dim() == 2) {
        PolarTable table(body, d);
        const double mass = table.total_mass();
        for (const Vec& u : grid.directions)
            values.push_back(table.weighted_support(std::atan2(u[1], u[0])) / mass);
    } else {
        for (const Vec& u : grid.directions) values.push_back(gamma_mu_support(body, d, u));
    }
    return values;
}

EuclidBody gamma_mu_body(const EuclidBody& body, const WeightedDensity& d,
                         const DirectionGrid& grid) {
    EuclidBody out = body_from_supports(grid, gamma_mu_supports(body, d, grid));
    out.symmetric = true;
    return out;
}

SphericalBody gamma_s(const SphericalBody& k, const DirectionGrid& grid) {
    const WeightedDensity psi{DensityKind::psi, k.image().dim()};
    return SphericalBody(k.frame(), gamma_mu_body(k.image(), psi, grid));
}

SphericalBody gamma_se_discrete(const std::vector<UnitVector>& points, const UnitVector& e) {
    const TangentFrame frame = TangentFrame::at(e);
    std::vector<ChartPoint> xs;
    xs.reserve(points.size());
    for (const UnitVector& u : points) xs.push_back(project(frame, u));
    const WeightedDensity phi{DensityKind::phi, frame.chart_dim()};
    EuclidBody image = gamma_f_discrete(xs, [&](const ChartPoint& x) { return phi(x); },
                                        /*allow_degenerate=*/true);
    return SphericalBody(frame, std::move(image));
}

std::vector<UnitVector> gamma_tilde_se(const std::vector<UnitVector>& points,
                                       const UnitVector& e, int per_segment) {
    if (per_segment < 2) throw std::invalid_argument("gamma_tilde_se: per_segment >= 2");
    const std::size_t n = points.size();
    if (n > 8) throw ProductTooLarge("gamma_tilde_se: N <= 8 enforced");
    for (const UnitVector& u : points)
        if (dot(u.coords(), e.coords()) <= kHemisphereMargin)
            throw HemisphereViolation("gamma_tilde_se: point outside the open hemisphere");
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= static_cast<std::size_t>(per_segment);
        if (total > (1u << 24)) throw ProductTooLarge("gamma_tilde_se: product too large");
    }
    // Precompute the per-segment geodesic samples [u^e, u].
    std::vector<std::vector<UnitVector>> segs;
    segs.reserve(n);
    for (const UnitVector& u : points) {
        std::vector<UnitVector> s;
        const UnitVector ue = reflect(u, e);
        for (int k = 0; k < per_segment; ++k)
            s.push_back(geodesic_point(ue, u, static_cast<double>(k) / (per_segment - 1)));
        segs.push_back(std::move(s));
    }
    std::vector<UnitVector> cloud;
    cloud.reserve(total);
    std::vector<int> idx(n, 0);
    std::vector<UnitVector> tuple;
    for (std::size_t c = 0; c < total; ++c) {
        tuple.clear();
        for (std::size_t i = 0; i < n; ++i) tuple.push_back(segs[i][idx[i]]);
        cloud.push_back(c_s_discrete(tuple));
        for (std::size_t i = 0; i < n; ++i) {
            if (++idx[i] < per_segment) break;
            idx[i] = 0;
        }
    }
    return cloud;
}

SphericalBody spherical_polar(const SphericalBody& k) {
    // g_{-e}(K*) coincides with g_e(K)^polar in the shared basis of R^n_e.
    TangentFrame antipodal(k.center().negated(), k.frame().basis());
    return SphericalBody(std::move(antipodal), polar(k.image()));
}

}  // namespace sphereoid
