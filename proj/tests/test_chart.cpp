#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sphereoid/chart.hpp"
#include "sphereoid/errors.hpp"
#include "sphereoid/sphere.hpp"

using namespace sphereoid;

namespace {
constexpr double kPi = std::numbers::pi;

UnitVector rand_unit(std::mt19937_64& rng, int ambient = 3) {
    std::normal_distribution<double> gauss;
    Vec v(ambient);
    for (double& x : v) x = gauss(rng);
    return UnitVector(normalized(v));
}

UnitVector rand_in_hemisphere(std::mt19937_64& rng, const TangentFrame& f,
                              double max_dist = 1.3) {
    std::uniform_real_distribution<double> ang(0.0, 2 * kPi), rad(0.0, max_dist);
    const double t = ang(rng), r = rad(rng);
    return unproject(f, ChartPoint{std::tan(r) * std::cos(t), std::tan(r) * std::sin(t)});
}
}  // namespace

TEST_CASE("tangent frame basis") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 50; ++i) {
        const TangentFrame f = TangentFrame::at(rand_unit(rng));
        REQUIRE(f.chart_dim() == 2);
        for (int a = 0; a < 2; ++a) {
            CHECK(std::abs(norm(f.basis()[a]) - 1.0) < 1e-12);
            CHECK(std::abs(dot(f.basis()[a], f.center().coords())) < 1e-12);
        }
        CHECK(std::abs(dot(f.basis()[0], f.basis()[1])) < 1e-12);
    }
    // Deterministic: same center gives same basis.
    const UnitVector e = rand_unit(rng);
    const TangentFrame f1 = TangentFrame::at(e), f2 = TangentFrame::at(e);
    CHECK(f1.basis()[0] == f2.basis()[0]);
    CHECK(f1.basis()[1] == f2.basis()[1]);
}

TEST_CASE("project basics") {
    const TangentFrame f = TangentFrame::at(UnitVector::pole(2));
    CHECK(norm(project(f, f.center())) < 1e-15);
    const UnitVector v(Vec{std::sin(kPi / 4), 0.0, std::cos(kPi / 4)});
    const ChartPoint x = project(f, v);
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(x[1]) < 1e-12);
    // Equator and beyond rejected.
    CHECK_THROWS_AS(project(f, UnitVector(Vec{1.0, 0.0, 0.0})), HemisphereViolation);
    CHECK_THROWS_AS(project(f, f.center().negated()), HemisphereViolation);
}

TEST_CASE("project reflection antipodality") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 100; ++i) {
        const TangentFrame f = TangentFrame::at(rand_unit(rng));
        const UnitVector v = rand_in_hemisphere(rng, f);
        const ChartPoint a = project(f, v);
        const ChartPoint b = project(f, reflect(v, f.center()));
        CHECK(dist(b, scale(a, -1.0)) < 1e-12);
    }
}

TEST_CASE("unproject roundtrip") {
    std::mt19937_64 rng(23);
    const TangentFrame f0 = TangentFrame::at(UnitVector::pole(2));
    CHECK(dist(unproject(f0, ChartPoint{0.0, 0.0}).coords(), f0.center().coords()) < 1e-15);
    for (int i = 0; i < 1000; ++i) {
        const TangentFrame f = TangentFrame::at(rand_unit(rng));
        const UnitVector v = rand_in_hemisphere(rng, f);
        CHECK(dist(unproject(f, project(f, v)).coords(), v.coords()) < 1e-12);
        std::uniform_real_distribution<double> coord(-3.0, 3.0);
        const ChartPoint x{coord(rng), coord(rng)};
        CHECK(dist(project(f, unproject(f, x)), x) < 1e-10 * (1.0 + norm2(x)));
    }
}

TEST_CASE("geodesics map to chart segments") {
    std::mt19937_64 rng(24);
    for (int i = 0; i < 50; ++i) {
        const TangentFrame f = TangentFrame::at(rand_unit(rng));
        const UnitVector a = rand_in_hemisphere(rng, f), b = rand_in_hemisphere(rng, f);
        const ChartPoint xa = project(f, a), xb = project(f, b);
        const ChartPoint xm = project(f, geodesic_point(a, b, 0.37));
        // Collinear with the segment and between the endpoints.
        CHECK(std::abs(cross2(sub(xm, xa), sub(xb, xa))) < 1e-9 * (1.0 + norm(sub(xb, xa))));
        const double t = dot(sub(xm, xa), sub(xb, xa)) / std::max(norm2(sub(xb, xa)), 1e-30);
        CHECK(t >= -1e-9);
        CHECK(t <= 1.0 + 1e-9);
    }
}

TEST_CASE("density values and factorization") {
    const WeightedDensity xi{DensityKind::xi, 2}, phi{DensityKind::phi, 2},
        psi{DensityKind::psi, 2}, leb{DensityKind::lebesgue, 2};
    const ChartPoint origin{0.0, 0.0};
    CHECK(xi(origin) == doctest::Approx(1.0));
    CHECK(phi(origin) == doctest::Approx(1.0));
    CHECK(psi(origin) == doctest::Approx(1.0));
    CHECK(leb(origin) == doctest::Approx(1.0));
    // n = 2, |x| = 1: psi = (1+1)^(-(n+2)/2) = 2^-2 = 0.25.
    const ChartPoint unit{1.0, 0.0};
    CHECK(psi(unit) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(xi(unit) == doctest::Approx(std::pow(2.0, -1.5)).epsilon(1e-14));
    CHECK(phi(unit) == doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-14));
    std::mt19937_64 rng(25);
    std::uniform_real_distribution<double> coord(-4.0, 4.0);
    for (int i = 0; i < 200; ++i) {
        const ChartPoint x{coord(rng), coord(rng)};
        CHECK(psi(x) == doctest::Approx(phi(x) * xi(x)).epsilon(1e-14));
        // Radially symmetric: value depends only on |x|.
        const double r = norm(x);
        CHECK(xi(x) == doctest::Approx(xi.radial(r)).epsilon(1e-13));
    }
    // Radially decreasing.
    for (double r = 0.0; r < 5.0; r += 0.25) {
        CHECK(xi.radial(r + 0.25) < xi.radial(r));
        CHECK(phi.radial(r + 0.25) < phi.radial(r));
        CHECK(psi.radial(r + 0.25) < psi.radial(r));
    }
}

TEST_CASE("phi equals cosine of the spherical distance to center") {
    std::mt19937_64 rng(26);
    const WeightedDensity phi{DensityKind::phi, 2};
    for (int i = 0; i < 1000; ++i) {
        const TangentFrame f = TangentFrame::at(rand_unit(rng));
        const UnitVector v = rand_in_hemisphere(rng, f, 1.45);
        CHECK(phi(project(f, v)) ==
              doctest::Approx(dot(v.coords(), f.center().coords())).epsilon(1e-12));
    }
}

TEST_CASE("radial primitive closed forms") {
    const WeightedDensity xi{DensityKind::xi, 2}, psi{DensityKind::psi, 2},
        phi{DensityKind::phi, 2}, leb{DensityKind::lebesgue, 2};
    CHECK(radial_primitive(xi, 1, 0.0) == doctest::Approx(0.0));
    // int_0^1 r (1+r^2)^{-3/2} dr = 1 - 2^{-1/2}.
    CHECK(radial_primitive(xi, 1, 1.0) ==
          doctest::Approx(1.0 - std::pow(2.0, -0.5)).epsilon(1e-13));
    // psi mass primitive saturates at 1/2 for large rho:
    // int_0^inf r (1+r^2)^{-2} dr = 1/2.
    CHECK(radial_primitive(psi, 1, 1e8) == doctest::Approx(0.5).epsilon(1e-8));
    // Oracle: closed forms vs adaptive quadrature, both powers, all kinds.
    std::mt19937_64 rng(27);
    std::uniform_real_distribution<double> rad(0.05, 6.0);
    for (const WeightedDensity* d : {&xi, &psi, &phi, &leb}) {
        for (int p : {1, 2}) {
            for (int i = 0; i < 25; ++i) {
                const double rho = rad(rng);
                const double oracle = adaptive_gauss_legendre(
                    [&](double r) { return std::pow(r, p) * d->radial(r); }, 0.0, rho,
                    1e-13);
                CHECK(radial_primitive(*d, p, rho) ==
                      doctest::Approx(oracle).epsilon(1e-11));
            }
        }
    }
    // Monotone in rho.
    CHECK(radial_primitive(psi, 2, 2.0) > radial_primitive(psi, 2, 1.0));
}

TEST_CASE("quadrature helpers") {
    // Smooth integrand with a known value.
    CHECK(adaptive_gauss_legendre([](double x) { return std::exp(x); }, 0.0, 1.0) ==
          doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
    CHECK(gauss_legendre_16([](double x) { return x * x * x; }, 0.0, 2.0) ==
          doctest::Approx(4.0).epsilon(1e-13));
}

TEST_CASE("density kind names") {
    for (DensityKind k : {DensityKind::xi, DensityKind::phi, DensityKind::psi,
                          DensityKind::lebesgue})
        CHECK(density_kind_from_string(to_string(k)) == k);
    CHECK_THROWS(density_kind_from_string("nope"));
}
