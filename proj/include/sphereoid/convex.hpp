#pragma once

// Convex bodies in the tangent chart. Exact polygon kernel for n = 2,
// direction-grid approximations for n >= 3.

#include <vector>

#include "sphereoid/linalg.hpp"

namespace sphereoid {

/// Convex body in R^n, vertex representation. For n = 2 vertices are kept in
/// CCW order. `degenerate` marks lower-dimensional sets (e.g. segments) that
/// are tolerated for the N = 1 discrete centroid bodies.
struct EuclidBody {
    std::vector<Vec> vertices;
    bool symmetric = false;
    bool degenerate = false;

    int dim() const { return vertices.empty() ? 0 : static_cast<int>(vertices[0].size()); }
    double max_vertex_norm() const;
    bool is_origin_symmetric(double tol = 1e-9) const;
};

struct HalfSpace {
    Vec normal;  // unit vector
    double offset = 0.0;  // set {x : normal . x <= offset}

    explicit HalfSpace(Vec n, double off = 0.0);
};

struct DirectionGrid {
    std::vector<Vec> directions;
    int resolution = 0;

    /// Quasi-uniform grid of unit n-vectors, closed under negation.
    /// n = 2: evenly spaced angles; n = 3: Fibonacci; n >= 4: seeded Gaussians.
    static DirectionGrid make(int dim, int resolution);
};

EuclidBody convex_hull(const std::vector<Vec>& points);

/// Like convex_hull but returns a flagged degenerate body instead of throwing
/// when the points do not span R^n.
EuclidBody convex_hull_allow_degenerate(const std::vector<Vec>& points);

double support(const EuclidBody& body, const Vec& u);

/// Radial function sup{t >= 0 : t v in body}; origin must be interior.
double radial(const EuclidBody& body, const Vec& v);

EuclidBody polar(const EuclidBody& body);

double euclid_hausdorff(const EuclidBody& a, const EuclidBody& b, const DirectionGrid& g);

/// Intersection of the halfplanes {x : u . x <= value(u)} over grid
/// directions; exact polygon clipping for n = 2, radial sampling for n >= 3.
EuclidBody body_from_supports(const DirectionGrid& grid, const std::vector<double>& values);

bool contains(const EuclidBody& body, const Vec& x, double tol = 1e-12);

EuclidBody regular_polygon(int m, double circumradius);

EuclidBody rotate_body(const EuclidBody& body, double angle);  // n = 2

/// Cached star-shaped-about-origin view of a CCW polygon: vertex angles plus
/// per-edge line data, for O(log m) radial queries at arbitrary angles.
class PolygonRays {
public:
    explicit PolygonRays(const EuclidBody& body);

    double rho(double theta) const;
    double rho_dir(const Vec& v) const { return rho(std::atan2(v[1], v[0])); }

    /// Vertex angles in increasing order, first in [0, 2pi).
    const std::vector<double>& vertex_angles() const { return angles_; }
    int edge_count() const { return static_cast<int>(angles_.size()); }

    /// Edge index whose angular interval contains theta.
    int edge_at(double theta) const;

    // Edge i spans [angles_[i], angles_[i] + span_[i]] with line x.normal = offset.
    double edge_start(int i) const { return angles_[i]; }
    double edge_span(int i) const { return spans_[i]; }
    const Vec& edge_normal(int i) const { return normals_[i]; }
    double edge_offset(int i) const { return offsets_[i]; }

private:
    std::vector<double> angles_;   // vertex angles, increasing
    std::vector<double> spans_;    // angular widths of the edges
    std::vector<Vec> normals_;     // outward unit normals
    std::vector<double> offsets_;  // support values along normals
};

}  // namespace sphereoid
