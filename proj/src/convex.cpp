#include "sphereoid/convex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "sphereoid/errors.hpp"

namespace sphereoid {

namespace {

constexpr double kPi = std::numbers::pi;

double coord_scale(const std::vector<Vec>& pts) {
    double s = 0.0;
    for (const Vec& p : pts)
        for (double c : p) s = std::max(s, std::abs(c));
    return s > 0.0 ? s : 1.0;
}

int affine_rank(const std::vector<Vec>& pts, double tol) {
    if (pts.empty()) return -1;
    std::vector<Vec> basis;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        Vec v = sub(pts[i], pts[0]);
        for (const Vec& b : basis) add_in_place(v, b, -dot(v, b));
        const double n = norm(v);
        if (n > tol) basis.push_back(scale(v, 1.0 / n));
    }
    return static_cast<int>(basis.size());
}

// Andrew monotone chain; returns CCW hull without collinear vertices.
// eps is the coordinate tolerance for merging near-duplicate points; the
// area tolerance for collinearity is derived from it per triangle.
std::vector<Vec> hull2d(std::vector<Vec> pts, double eps, double area_eps) {
    std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    // Merge clusters of near-duplicate points. Interleaved clusters (points
    // within eps of each other that are not adjacent in the sort order) would
    // otherwise defeat the chain's turn tests, so scan a sliding x-window.
    {
        std::vector<char> dead(pts.size(), 0);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (dead[i]) continue;
            for (std::size_t j = i + 1;
                 j < pts.size() && pts[j][0] - pts[i][0] <= eps; ++j)
                if (!dead[j] && std::abs(pts[j][1] - pts[i][1]) <= eps) dead[j] = 1;
        }
        std::size_t w = 0;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (!dead[i]) pts[w++] = pts[i];
        pts.resize(w);
    }
    const std::size_t m = pts.size();
    if (m < 3) return pts;
    std::vector<Vec> h(2 * m);
    std::size_t k = 0;
    auto turn = [](const Vec& o, const Vec& a, const Vec& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    for (std::size_t i = 0; i < m; ++i) {
        while (k >= 2 && turn(h[k - 2], h[k - 1], pts[i]) <= area_eps) --k;
        h[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = m - 1; i-- > 0;) {
        while (k >= lower && turn(h[k - 2], h[k - 1], pts[i]) <= area_eps) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

std::vector<Vec> extreme_points_grid(const std::vector<Vec>& pts, int dim) {
    const DirectionGrid g = DirectionGrid::make(dim, dim == 3 ? 2000 : 4000);
    std::set<std::size_t> keep;
    for (const Vec& u : g.directions) {
        double best = -1e300;
        std::size_t arg = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const double v = dot(u, pts[i]);
            if (v > best) { best = v; arg = i; }
        }
        keep.insert(arg);
    }
    std::vector<Vec> out;
    for (std::size_t i : keep) out.push_back(pts[i]);
    return out;
}

}  // namespace

double EuclidBody::max_vertex_norm() const {
    double s = 0.0;
    for (const Vec& v : vertices) s = std::max(s, norm(v));
    return s;
}

bool EuclidBody::is_origin_symmetric(double tol) const {
    const std::size_t m = vertices.size();
    if (dim() == 2 && m >= 3) {
        // CCW vertex order: central symmetry pairs vertex i with i + m/2.
        if (m % 2 != 0) return false;
        for (std::size_t i = 0; i < m / 2; ++i)
            if (dist(scale(vertices[i], -1.0), vertices[i + m / 2]) > tol) return false;
        return true;
    }
    for (const Vec& v : vertices) {
        bool found = false;
        for (const Vec& w : vertices)
            if (dist(scale(v, -1.0), w) <= tol) { found = true; break; }
        if (!found) return false;
    }
    return true;
}

HalfSpace::HalfSpace(Vec n, double off) : normal(std::move(n)), offset(off) {
    const double nn = norm(normal);
    if (std::abs(nn - 1.0) > 1e-9)
        throw std::invalid_argument("HalfSpace: normal must have unit norm");
    normal = scale(normal, 1.0 / nn);
}

DirectionGrid DirectionGrid::make(int dim, int resolution) {
    DirectionGrid g;
    g.resolution = resolution;
    g.directions.reserve(resolution);
    if (dim == 2) {
        if (resolution % 2 != 0)
            throw std::invalid_argument("DirectionGrid: resolution must be even for n = 2");
        for (int k = 0; k < resolution; ++k) {
            const double t = 2.0 * kPi * k / resolution;
            g.directions.push_back(Vec{std::cos(t), std::sin(t)});
        }
    } else if (dim == 3) {
        const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
        const int half = resolution / 2;
        for (int k = 0; k < half; ++k) {
            const double z = 1.0 - 2.0 * (k + 0.5) / resolution;  // upper hemisphere
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double t = 2.0 * kPi * k / golden;
            Vec v{r * std::cos(t), r * std::sin(t), z};
            g.directions.push_back(v);
            g.directions.push_back(scale(v, -1.0));
        }
    } else {
        std::mt19937_64 rng(0xd12ec7105ULL + static_cast<std::uint64_t>(dim));
        std::normal_distribution<double> gauss(0.0, 1.0);
        while (static_cast<int>(g.directions.size()) < resolution) {
            Vec v(dim);
            for (double& x : v) x = gauss(rng);
            if (norm(v) < 1e-9) continue;
            v = normalized(v);
            g.directions.push_back(v);
            g.directions.push_back(scale(v, -1.0));
        }
    }
    return g;
}

EuclidBody convex_hull(const std::vector<Vec>& points) {
    if (points.empty()) throw DegenerateHull("convex_hull: empty point set");
    const int dim = static_cast<int>(points[0].size());
    const double scl = coord_scale(points);
    if (affine_rank(points, 1e-12 * scl) < dim)
        throw DegenerateHull("convex_hull: points do not span R^n");
    EuclidBody b;
    if (dim == 2) {
        b.vertices = hull2d(points, 1e-12 * scl, 1e-12 * scl * scl);
    } else {
        b.vertices = extreme_points_grid(points, dim);
    }
    b.symmetric = b.is_origin_symmetric(1e-12 * scl);
    return b;
}

EuclidBody convex_hull_allow_degenerate(const std::vector<Vec>& points) {
    if (points.empty()) throw DegenerateHull("convex_hull: empty point set");
    const int dim = static_cast<int>(points[0].size());
    const double scl = coord_scale(points);
    const int rank = affine_rank(points, 1e-12 * scl);
    if (rank >= dim) return convex_hull(points);
    EuclidBody b;
    b.degenerate = true;
    if (rank <= 0) {
        b.vertices = {points[0]};
    } else {
        // Keep the two extremes along the principal direction of the flat.
        Vec dir;
        for (std::size_t i = 1; i < points.size(); ++i) {
            Vec d = sub(points[i], points[0]);
            if (norm(d) > 1e-12 * scl) { dir = normalized(d); break; }
        }
        double lo = 0.0, hi = 0.0;
        std::size_t ilo = 0, ihi = 0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            const double t = dot(sub(points[i], points[0]), dir);
            if (t < lo) { lo = t; ilo = i; }
            if (t > hi) { hi = t; ihi = i; }
        }
        b.vertices = {points[ilo], points[ihi]};
    }
    b.symmetric = b.is_origin_symmetric(1e-12 * scl);
    return b;
}

double support(const EuclidBody& body, const Vec& u) {
    double s = -1e300;
    for (const Vec& v : body.vertices) s = std::max(s, dot(u, v));
    return s;
}

double radial(const EuclidBody& body, const Vec& v) {
    if (body.dim() == 2) return PolygonRays(body).rho_dir(v);
    // Outer grid approximation: radial of the support-hull along v.
    const DirectionGrid g = DirectionGrid::make(body.dim(), body.dim() == 3 ? 2000 : 4000);
    double r = 1e300;
    for (const Vec& u : g.directions) {
        const double c = dot(u, v);
        if (c > 1e-9) {
            const double h = support(body, u);
            if (h <= 0.0) throw OriginNotInterior("radial: origin not interior");
            r = std::min(r, h / c);
        }
    }
    return r;
}

EuclidBody polar(const EuclidBody& body) {
    EuclidBody p;
    p.symmetric = body.symmetric;
    if (body.dim() == 2) {
        PolygonRays rays(body);
        for (int i = 0; i < rays.edge_count(); ++i)
            p.vertices.push_back(scale(rays.edge_normal(i), 1.0 / rays.edge_offset(i)));
    } else {
        const DirectionGrid g = DirectionGrid::make(body.dim(), body.dim() == 3 ? 2000 : 4000);
        std::vector<Vec> pts;
        for (const Vec& w : g.directions) {
            const double h = support(body, w);
            if (h <= 0.0) throw OriginNotInterior("polar: origin not interior");
            pts.push_back(scale(w, 1.0 / h));
        }
        p.vertices = extreme_points_grid(pts, body.dim());
    }
    return p;
}

double euclid_hausdorff(const EuclidBody& a, const EuclidBody& b, const DirectionGrid& g) {
    double d = 0.0;
    for (const Vec& u : g.directions) d = std::max(d, std::abs(support(a, u) - support(b, u)));
    return d;
}

EuclidBody body_from_supports(const DirectionGrid& grid, const std::vector<double>& values) {
    if (grid.directions.size() != values.size())
        throw std::invalid_argument("body_from_supports: grid/value size mismatch");
    for (double v : values)
        if (!(v > 0.0)) throw InfeasibleSupports("body_from_supports: nonpositive support value");
    const int dim = static_cast<int>(grid.directions[0].size());
    const double big = 4.0 * *std::max_element(values.begin(), values.end());
    if (dim == 2) {
        // Sutherland-Hodgman clipping of a bounding square by every halfplane.
        std::vector<Vec> poly = {Vec{-big, -big}, Vec{big, -big}, Vec{big, big}, Vec{-big, big}};
        for (std::size_t k = 0; k < values.size(); ++k) {
            const Vec& u = grid.directions[k];
            const double c = values[k];
            std::vector<Vec> out;
            out.reserve(poly.size() + 1);
            const std::size_t m = poly.size();
            for (std::size_t i = 0; i < m; ++i) {
                const Vec& a = poly[i];
                const Vec& b = poly[(i + 1) % m];
                const double da = dot(u, a) - c;
                const double db = dot(u, b) - c;
                if (da <= 0.0) out.push_back(a);
                if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
                    const double t = da / (da - db);
                    out.push_back(add(a, scale(sub(b, a), t)));
                }
            }
            poly.swap(out);
            if (poly.size() < 3)
                throw InfeasibleSupports("body_from_supports: support values are inconsistent");
        }
        return convex_hull(poly);
    }
    // n >= 3: sample boundary points along grid rays.
    std::vector<Vec> pts;
    pts.reserve(grid.directions.size());
    for (const Vec& w : grid.directions) {
        double r = big;
        for (std::size_t k = 0; k < values.size(); ++k) {
            const double c = dot(grid.directions[k], w);
            if (c > 1e-9) r = std::min(r, values[k] / c);
        }
        if (!(r > 0.0))
            throw InfeasibleSupports("body_from_supports: support values are inconsistent");
        pts.push_back(scale(w, r));
    }
    return convex_hull(pts);
}

bool contains(const EuclidBody& body, const Vec& x, double tol) {
    if (body.dim() == 2 && !body.degenerate) {
        const std::size_t m = body.vertices.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Vec& a = body.vertices[i];
            const Vec& b = body.vertices[(i + 1) % m];
            const double ex = b[0] - a[0], ey = b[1] - a[1];
            const double cx = x[0] - a[0], cy = x[1] - a[1];
            if (ex * cy - ey * cx < -tol * std::max(1.0, ex * ex + ey * ey)) return false;
        }
        return true;
    }
    const DirectionGrid g = DirectionGrid::make(body.dim(), body.dim() == 3 ? 2000 : 4000);
    for (const Vec& u : g.directions)
        if (dot(u, x) > support(body, u) + tol) return false;
    return true;
}

EuclidBody regular_polygon(int m, double circumradius) {
    std::vector<Vec> pts;
    pts.reserve(m);
    for (int k = 0; k < m; ++k) {
        const double t = 2.0 * kPi * k / m;
        pts.push_back(Vec{circumradius * std::cos(t), circumradius * std::sin(t)});
    }
    EuclidBody b = convex_hull(pts);
    b.symmetric = (m % 2 == 0);
    return b;
}

EuclidBody rotate_body(const EuclidBody& body, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    EuclidBody out = body;
    for (Vec& v : out.vertices) v = Vec{c * v[0] - s * v[1], s * v[0] + c * v[1]};
    return out;
}

PolygonRays::PolygonRays(const EuclidBody& body) {
    if (body.dim() != 2) throw std::invalid_argument("PolygonRays: requires n = 2");
    if (body.degenerate || body.vertices.size() < 3)
        throw OriginNotInterior("PolygonRays: degenerate polygon");
    const std::size_t m = body.vertices.size();
    std::vector<double> raw(m);
    std::size_t start = 0;
    for (std::size_t i = 0; i < m; ++i) {
        raw[i] = std::atan2(body.vertices[i][1], body.vertices[i][0]);
        if (raw[i] < 0.0) raw[i] += 2.0 * kPi;
        if (raw[i] < raw[start]) start = i;
    }
    angles_.resize(m);
    spans_.resize(m);
    normals_.resize(m);
    offsets_.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t i = (start + k) % m;
        const Vec& a = body.vertices[i];
        const Vec& b = body.vertices[(i + 1) % m];
        angles_[k] = raw[i];
        if (k > 0 && angles_[k] <= angles_[k - 1]) angles_[k] += 2.0 * kPi;
        Vec edge = sub(b, a);
        const double en = norm(edge);
        if (en < 1e-300) throw std::invalid_argument("PolygonRays: zero-length edge");
        Vec nrm{edge[1] / en, -edge[0] / en};  // outward for CCW order
        const double off = dot(nrm, a);
        if (off <= 0.0) throw OriginNotInterior("PolygonRays: origin not interior");
        normals_[k] = std::move(nrm);
        offsets_[k] = off;
    }
    for (std::size_t k = 0; k < m; ++k) {
        const double next = (k + 1 < m) ? angles_[k + 1] : angles_[0] + 2.0 * kPi;
        spans_[k] = next - angles_[k];
    }
}

int PolygonRays::edge_at(double theta) const {
    const double base = angles_.front();
    double t = std::fmod(theta - base, 2.0 * kPi);
    if (t < 0.0) t += 2.0 * kPi;
    t += base;
    const auto it = std::upper_bound(angles_.begin(), angles_.end(), t);
    return static_cast<int>((it - angles_.begin()) - 1);
}

double PolygonRays::rho(double theta) const {
    const int i = edge_at(theta);
    const Vec v{std::cos(theta), std::sin(theta)};
    const double c = dot(normals_[i], v);
    if (c <= 1e-300) return 1e300;
    return offsets_[i] / c;
}

}  // namespace sphereoid
