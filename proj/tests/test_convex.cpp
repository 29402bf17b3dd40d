#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sphereoid/convex.hpp"
#include "sphereoid/errors.hpp"

using namespace sphereoid;

namespace {
constexpr double kPi = std::numbers::pi;

EuclidBody unit_square() {
    return convex_hull({Vec{1, 1}, Vec{1, -1}, Vec{-1, -1}, Vec{-1, 1}});
}

EuclidBody random_sym_polygon(std::mt19937_64& rng, int half = 6) {
    std::uniform_real_distribution<double> ang(0.0, kPi), rad(0.4, 1.5);
    std::vector<Vec> pts;
    for (int i = 0; i < half; ++i) {
        const double t = ang(rng) + i * kPi / half, r = rad(rng);
        pts.push_back(Vec{r * std::cos(t), r * std::sin(t)});
        pts.push_back(Vec{-r * std::cos(t), -r * std::sin(t)});
    }
    EuclidBody b = convex_hull(pts);
    b.symmetric = true;
    return b;
}

// Oracle: brute-force support value over the vertex list.
double support_brute(const EuclidBody& b, const Vec& u) {
    double best = -1e300;
    for (const Vec& v : b.vertices) best = std::max(best, dot(u, v));
    return best;
}

// Oracle: radial function by explicit ray-edge intersection.
double radial_brute(const EuclidBody& b, const Vec& dir) {
    double best = 0.0;
    const std::size_t m = b.vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Vec& p = b.vertices[i];
        const Vec& q = b.vertices[(i + 1) % m];
        const Vec e = sub(q, p);
        const double den = cross2(dir, e);
        if (std::abs(den) < 1e-15) continue;
        const double t = cross2(p, e) / den;    // ray parameter
        const double s = cross2(p, dir) / den;  // edge parameter
        if (t >= 0.0 && s >= -1e-12 && s <= 1.0 + 1e-12) best = std::max(best, t);
    }
    return best;
}
}  // namespace

TEST_CASE("convex hull basics") {
    // Diamond with an interior point dropped.
    const EuclidBody d = convex_hull(
        {Vec{1, 0}, Vec{0, 1}, Vec{-1, 0}, Vec{0, -1}, Vec{0.2, 0.1}});
    CHECK(d.vertices.size() == 4);
    // Square plus origin: origin dropped.
    const EuclidBody s = convex_hull(
        {Vec{1, 1}, Vec{1, -1}, Vec{-1, -1}, Vec{-1, 1}, Vec{0, 0}});
    CHECK(s.vertices.size() == 4);
    // CCW orientation.
    double area2 = 0.0;
    for (std::size_t i = 0; i < s.vertices.size(); ++i)
        area2 += cross2(s.vertices[i], s.vertices[(i + 1) % s.vertices.size()]);
    CHECK(area2 > 0.0);
    // Collinear input rejected.
    CHECK_THROWS_AS(convex_hull({Vec{0, 0}, Vec{1, 1}, Vec{2, 2}}), DegenerateHull);
    CHECK(convex_hull_allow_degenerate({Vec{-1, -1}, Vec{1, 1}}).degenerate);
    // Idempotence.
    const EuclidBody s2 = convex_hull(s.vertices);
    REQUIRE(s2.vertices.size() == s.vertices.size());
}

TEST_CASE("hull contains its generators") {
    std::mt19937_64 rng(31);
    std::normal_distribution<double> gauss;
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<Vec> pts;
        for (int i = 0; i < 12; ++i) pts.push_back(Vec{gauss(rng), gauss(rng)});
        EuclidBody h;
        try {
            h = convex_hull(pts);
        } catch (const DegenerateHull&) {
            continue;
        }
        for (const Vec& p : pts) CHECK(contains(h, p, 1e-9));
    }
}

TEST_CASE("support function") {
    const EuclidBody sq = unit_square();
    CHECK(support(sq, Vec{1, 0}) == doctest::Approx(1.0));
    const double is2 = 1.0 / std::sqrt(2.0);
    CHECK(support(sq, Vec{is2, is2}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
    // Sublinearity and evenness (symmetric body) on random directions.
    std::mt19937_64 rng(32);
    std::normal_distribution<double> gauss;
    const EuclidBody body = random_sym_polygon(rng);
    for (int i = 0; i < 100; ++i) {
        const Vec u = normalized(Vec{gauss(rng), gauss(rng)});
        const Vec v = normalized(Vec{gauss(rng), gauss(rng)});
        CHECK(support(body, add(u, v)) <= support(body, u) + support(body, v) + 1e-12);
        CHECK(support(body, u) ==
              doctest::Approx(support(body, scale(u, -1.0))).epsilon(1e-12));
        CHECK(support(body, u) == doctest::Approx(support_brute(body, u)));
    }
}

TEST_CASE("radial function") {
    const EuclidBody sq = unit_square();
    CHECK(radial(sq, Vec{1, 0}) == doctest::Approx(1.0));
    const double is2 = 1.0 / std::sqrt(2.0);
    CHECK(radial(sq, Vec{is2, is2}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    // Fine regular polygon approximates the disk.
    const EuclidBody disk = regular_polygon(256, 0.7);
    std::mt19937_64 rng(33);
    std::normal_distribution<double> gauss;
    for (int i = 0; i < 50; ++i) {
        const Vec u = normalized(Vec{gauss(rng), gauss(rng)});
        CHECK(std::abs(radial(disk, u) - 0.7) < 1e-3);
    }
    // Oracle comparison on a random polygon.
    const EuclidBody body = random_sym_polygon(rng);
    for (int i = 0; i < 100; ++i) {
        const Vec u = normalized(Vec{gauss(rng), gauss(rng)});
        CHECK(radial(body, u) == doctest::Approx(radial_brute(body, u)).epsilon(1e-10));
    }
}

TEST_CASE("polygon rays agree with radial") {
    std::mt19937_64 rng(34);
    const EuclidBody body = random_sym_polygon(rng, 8);
    const PolygonRays rays(body);
    CHECK(rays.edge_count() == static_cast<int>(body.vertices.size()));
    std::uniform_real_distribution<double> ang(-10.0, 10.0);
    for (int i = 0; i < 300; ++i) {
        const double t = ang(rng);
        const Vec u{std::cos(t), std::sin(t)};
        CHECK(rays.rho(t) == doctest::Approx(radial(body, u)).epsilon(1e-10));
        const int e = rays.edge_at(t);
        CHECK(std::abs(dot(rays.edge_normal(e), scale(u, rays.rho(t))) -
                       rays.edge_offset(e)) < 1e-9);
    }
}

TEST_CASE("polar bodies") {
    // Square [-1,1]^2 polar is the diamond conv{(+-1,0),(0,+-1)}.
    const EuclidBody diamond = polar(unit_square());
    REQUIRE(diamond.vertices.size() == 4);
    for (const Vec& v : diamond.vertices) {
        CHECK(std::abs(v[0]) + std::abs(v[1]) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(v[0] * v[1]) < 1e-12);
    }
    // Polar of r*B approximates (1/r)*B.
    const EuclidBody ball = regular_polygon(128, 0.5);
    const EuclidBody pol = polar(ball);
    std::mt19937_64 rng(35);
    std::normal_distribution<double> gauss;
    for (int i = 0; i < 50; ++i) {
        const Vec u = normalized(Vec{gauss(rng), gauss(rng)});
        CHECK(std::abs(radial(pol, u) - 2.0) < 2e-3);
    }
    // Duality: radial of the polar is 1 / support, bipolar is the identity.
    for (int rep = 0; rep < 20; ++rep) {
        const EuclidBody body = random_sym_polygon(rng);
        const EuclidBody p = polar(body);
        for (int i = 0; i < 40; ++i) {
            const Vec u = normalized(Vec{gauss(rng), gauss(rng)});
            CHECK(radial(p, u) == doctest::Approx(1.0 / support(body, u)).epsilon(1e-10));
        }
        const EuclidBody pp = polar(p);
        REQUIRE(pp.vertices.size() == body.vertices.size());
        // Vertex sets agree up to cyclic shift.
        double worst = 1e300;
        for (std::size_t off = 0; off < body.vertices.size(); ++off) {
            double w = 0.0;
            for (std::size_t i = 0; i < body.vertices.size(); ++i)
                w = std::max(w, dist(pp.vertices[(i + off) % body.vertices.size()],
                                     body.vertices[i]));
            worst = std::min(worst, w);
        }
        CHECK(worst < 1e-10);
    }
    CHECK_THROWS_AS(polar(convex_hull({Vec{1, 1}, Vec{2, 1}, Vec{1, 2}})),
                    OriginNotInterior);
}

TEST_CASE("euclidean hausdorff") {
    const DirectionGrid g = DirectionGrid::make(2, 720);
    const EuclidBody sq = unit_square();
    CHECK(euclid_hausdorff(sq, sq, g) == doctest::Approx(0.0));
    // Square vs its dilate by 2: sup |h1 - h2| = max over grid of h(u), at
    // the diagonal h = sqrt(2).
    const EuclidBody big = convex_hull({Vec{2, 2}, Vec{2, -2}, Vec{-2, -2}, Vec{-2, 2}});
    CHECK(euclid_hausdorff(sq, big, g) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
    // Segments on the x-axis: distance 1.
    EuclidBody s1 = convex_hull_allow_degenerate({Vec{-1, 0}, Vec{1, 0}});
    EuclidBody s2 = convex_hull_allow_degenerate({Vec{-2, 0}, Vec{2, 0}});
    CHECK(euclid_hausdorff(s1, s2, g) == doctest::Approx(1.0).epsilon(1e-9));
    // Symmetry and triangle inequality on random bodies.
    std::mt19937_64 rng(36);
    const EuclidBody a = random_sym_polygon(rng), b = random_sym_polygon(rng),
                     c = random_sym_polygon(rng);
    CHECK(euclid_hausdorff(a, b, g) == doctest::Approx(euclid_hausdorff(b, a, g)));
    CHECK(euclid_hausdorff(a, c, g) <=
          euclid_hausdorff(a, b, g) + euclid_hausdorff(b, c, g) + 1e-12);
}

TEST_CASE("body from supports") {
    const DirectionGrid g = DirectionGrid::make(2, 720);
    // Constant supports give (approximately) the ball.
    std::vector<double> vals(g.directions.size(), 0.8);
    const EuclidBody ball = body_from_supports(g, vals);
    for (const Vec& v : ball.vertices) CHECK(norm(v) == doctest::Approx(0.8).epsilon(1e-4));
    // Square supports recover the square (facet normals are on the grid).
    const EuclidBody sq = unit_square();
    std::vector<double> sv;
    for (const Vec& u : g.directions) sv.push_back(support(sq, u));
    const EuclidBody rec = body_from_supports(g, sv);
    for (const Vec& u : g.directions)
        CHECK(support(rec, u) == doctest::Approx(support(sq, u)).epsilon(1e-9));
    CHECK(contains(rec, Vec{1.0 - 1e-9, 1.0 - 1e-9}, 1e-6));
}

TEST_CASE("support monotone under inclusion") {
    std::mt19937_64 rng(37);
    std::normal_distribution<double> gauss;
    const EuclidBody inner = random_sym_polygon(rng);
    // Outer: hull of inner's vertices scaled up.
    std::vector<Vec> pts;
    for (const Vec& v : inner.vertices) pts.push_back(scale(v, 1.5));
    const EuclidBody outer = convex_hull(pts);
    for (int i = 0; i < 100; ++i) {
        const Vec u = normalized(Vec{gauss(rng), gauss(rng)});
        CHECK(support(inner, u) <= support(outer, u) + 1e-12);
        CHECK(radial(inner, u) <= radial(outer, u) + 1e-12);
    }
}

TEST_CASE("origin symmetry detection") {
    CHECK(unit_square().is_origin_symmetric());
    CHECK(regular_polygon(64, 1.0).is_origin_symmetric());
    CHECK_FALSE(convex_hull({Vec{1, 1}, Vec{2, 1}, Vec{1, 2}}).is_origin_symmetric());
    std::mt19937_64 rng(38);
    CHECK(random_sym_polygon(rng, 9).is_origin_symmetric());
}

TEST_CASE("rotate body") {
    const EuclidBody sq = unit_square();
    const EuclidBody rot = rotate_body(sq, kPi / 2);
    for (const Vec& u : DirectionGrid::make(2, 64).directions)
        CHECK(support(rot, u) == doctest::Approx(support(sq, u)).epsilon(1e-12));
    const EuclidBody r2 = rotate_body(sq, 0.3);
    CHECK(support(r2, Vec{std::cos(0.3), std::sin(0.3)}) ==
          doctest::Approx(support(sq, Vec{1, 0})).epsilon(1e-12));
}

TEST_CASE("direction grid closed under negation") {
    for (int res : {64, 720}) {
        const DirectionGrid g = DirectionGrid::make(2, res);
        for (const Vec& u : g.directions) {
            CHECK(std::abs(norm(u) - 1.0) < 1e-12);
            double best = 1e300;
            for (const Vec& v : g.directions) best = std::min(best, dist(v, scale(u, -1.0)));
            CHECK(best < 1e-9);
        }
    }
}
