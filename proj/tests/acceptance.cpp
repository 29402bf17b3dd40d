// Acceptance suite: ten end-to-end checks of the toolkit, one verdict line
// each. Exit code is the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "sphereoid/bodies.hpp"
#include "sphereoid/centroid.hpp"
#include "sphereoid/errors.hpp"
#include "sphereoid/experiment.hpp"
#include "sphereoid/measure.hpp"

using namespace sphereoid;

namespace {

constexpr double kPi = std::numbers::pi;

int failures = 0;

void verdict(int num, const char* what, bool ok, const std::string& detail) {
    std::printf("criterion %2d [%s] %s  (%s)\n", num, ok ? "PASS" : "FAIL", what,
                detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), f, a, b, c);
    return buf;
}

UnitVector rand_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    return UnitVector(normalized(Vec{gauss(rng), gauss(rng), gauss(rng)}));
}

// 1. Chart identities: projection roundtrip, the cosine identity for phi, and
// the spherical region centroid against a closed-form spherical-coordinate
// oracle for half-caps (moment components along the hemisphere center and the
// cap center integrate in elementary terms).
void criterion1() {
    std::mt19937_64 rng(101);
    const WeightedDensity phi{DensityKind::phi, 2};
    double worst_rt = 0.0, worst_phi = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const TangentFrame f = TangentFrame::at(rand_unit(rng));
        std::uniform_real_distribution<double> coord(-2.5, 2.5);
        const ChartPoint x{coord(rng), coord(rng)};
        const UnitVector v = unproject(f, x);
        worst_rt = std::max(worst_rt, dist(project(f, v), x) / (1.0 + norm2(x)));
        worst_phi = std::max(worst_phi,
                             std::abs(phi(x) - dot(v.coords(), f.center().coords())));
    }
    double worst_c = 0.0;
    std::uniform_real_distribution<double> rad(0.2, 1.3), ang(0.0, 2 * kPi);
    for (int i = 0; i < 50; ++i) {
        const double r = rad(rng);
        const UnitVector e = rand_unit(rng);
        const SphericalBody cap = cap_body(e, r, 4096);
        const double t = ang(rng);
        const Vec w{std::cos(t), std::sin(t)};
        const UnitVector got = c_s_region(cap, w);
        // Oracle in spherical coordinates about e: the half-cap moment is
        //   (r - sin(2r)/2) w_hat + (pi sin^2 r / 2) e.
        Vec w_hat = scale(cap.frame().basis()[0], w[0]);
        add_in_place(w_hat, cap.frame().basis()[1], w[1]);
        Vec m = scale(w_hat, r - 0.5 * std::sin(2 * r));
        add_in_place(m, e.coords(), 0.5 * kPi * std::sin(r) * std::sin(r));
        worst_c = std::max(worst_c, spherical_distance(got, UnitVector(normalized(m))));
    }
    const bool ok = worst_rt < 1e-12 && worst_phi < 1e-12 && worst_c < 1e-6;
    verdict(1, "chart identities (roundtrip, cosine factor, region centroid)", ok,
            fmt("roundtrip %.2e, phi %.2e, centroid %.2e", worst_rt, worst_phi, worst_c));
}

// 2. Closed-form cap measures vs adaptive quadrature and Monte Carlo.
void criterion2() {
    double worst_s = 0.0, worst_t = 0.0;
    const WeightedDensity xi{DensityKind::xi, 2}, psi{DensityKind::psi, 2};
    for (double r = 0.1; r < 1.45; r += 0.1) {
        const double rho = std::tan(r);
        const double qs = 2 * kPi *
                          adaptive_gauss_legendre(
                              [&](double s) { return s * xi.radial(s); }, 0.0, rho, 1e-13);
        const double qt = 2 * kPi *
                          adaptive_gauss_legendre(
                              [&](double s) { return s * psi.radial(s); }, 0.0, rho, 1e-13);
        worst_s = std::max(worst_s, std::abs(qs - cap_sigma(r, 2)));
        worst_t = std::max(worst_t, std::abs(qt - cap_tau(r, 2)));
    }
    // Monte Carlo at 1e6 uniform sphere samples, cap of radius 0.7.
    const double r = 0.7;
    const int reps = 1000000;
    std::mt19937_64 rng(102);
    std::normal_distribution<double> gauss;
    const double cz = std::cos(r);
    long hits = 0;
    double tsum = 0.0, tsq = 0.0;
    for (int i = 0; i < reps; ++i) {
        const Vec u = normalized(Vec{gauss(rng), gauss(rng), gauss(rng)});
        const double in = u[2] >= cz ? 1.0 : 0.0;
        hits += in > 0.5;
        const double tv = in * std::abs(u[2]);  // tau integrand
        tsum += tv;
        tsq += tv * tv;
    }
    const double p = static_cast<double>(hits) / reps;
    const double ps = cap_sigma(r, 2) / (4 * kPi);
    const double sd_s = std::sqrt(ps * (1 - ps) / reps);
    const double tm = tsum / reps;
    const double pt = cap_tau(r, 2) / (4 * kPi);
    const double sd_t = std::sqrt((tsq / reps - tm * tm) / reps);
    const bool mc_ok = std::abs(p - ps) < 3 * sd_s && std::abs(tm - pt) < 3 * sd_t;
    const bool ok = worst_s < 1e-8 && worst_t < 1e-8 && mc_ok;
    verdict(2, "cap measure closed forms (quadrature 1e-8, Monte Carlo 3 sigma)", ok,
            fmt("quad %.2e/%.2e, mc sigma %.2f sd", worst_s, worst_t,
                std::abs(p - ps) / sd_s));
}

// 3. Discrete body equivalence: hull-of-sign-centroids supports equal the
// closed support formula for f = phi on 100 random instances.
void criterion3() {
    std::mt19937_64 rng(103);
    const DirectionGrid grid = DirectionGrid::make(2, 720);
    const WeightedDensity phi{DensityKind::phi, 2};
    const WeightFn f = [&](const ChartPoint& x) { return phi(x); };
    double worst = 0.0;
    int done = 0;
    while (done < 100) {
        const int count = 2 + static_cast<int>(rng() % 9);
        std::uniform_real_distribution<double> coord(-1.3, 1.3);
        std::vector<ChartPoint> pts;
        for (int i = 0; i < count; ++i) pts.push_back(Vec{coord(rng), coord(rng)});
        EuclidBody b;
        try {
            b = gamma_f_discrete(pts, f);
        } catch (const DegenerateHull&) {
            continue;
        }
        ++done;
        for (const Vec& u : grid.directions)
            worst = std::max(worst, std::abs(support(b, u) - gamma_f_support(pts, f, u)));
    }
    verdict(3, "discrete centroid body = support formula (100 instances)", worst < 1e-10,
            fmt("worst support gap %.2e", worst));
}

// 4. Centroid-cloud identity and radial monotonicity.
void criterion4() {
    std::mt19937_64 rng(104);
    const UnitVector e = UnitVector::pole(2);
    const TangentFrame f = TangentFrame::at(e);
    const DirectionGrid grid = DirectionGrid::make(2, 720);
    double worst = 0.0;
    int done = 0;
    while (done < 50) {
        const int count = 2 + static_cast<int>(rng() % 2);  // 2..3
        std::uniform_real_distribution<double> coord(-1.1, 1.1);
        std::vector<UnitVector> pts;
        for (int i = 0; i < count; ++i)
            pts.push_back(unproject(f, ChartPoint{coord(rng), coord(rng)}));
        const SphericalBody body = gamma_se_discrete(pts, e);
        if (body.degenerate()) continue;
        std::vector<Vec> xs;
        for (const UnitVector& p : gamma_tilde_se(pts, e, 9)) xs.push_back(project(f, p));
        EuclidBody hull;
        try {
            hull = convex_hull(xs);
        } catch (const DegenerateHull&) {
            continue;
        }
        ++done;
        for (const Vec& u : grid.directions)
            worst = std::max(worst, std::abs(support(hull, u) - support(body.image(), u)));
    }
    // Radial monotonicity: growing one segment never shrinks a support value.
    const WeightedDensity phi{DensityKind::phi, 2};
    const WeightFn fw = [&](const ChartPoint& x) { return phi(x); };
    bool monotone = true;
    for (int rep = 0; rep < 100; ++rep) {
        std::uniform_real_distribution<double> coord(-1.0, 1.0);
        std::vector<ChartPoint> base;
        for (int i = 0; i < 4; ++i) base.push_back(Vec{coord(rng), coord(rng)});
        std::normal_distribution<double> gauss;
        const Vec u = normalized(Vec{gauss(rng), gauss(rng)});
        if (std::abs(dot(u, base[0])) < 1e-6) continue;
        double prev = -1.0;
        for (int step = 1; step <= 10; ++step) {
            auto pts = base;
            pts[0] = scale(base[0], 0.1 * step);
            const double h = gamma_f_support(pts, fw, u);
            monotone = monotone && h > prev;
            prev = h;
        }
    }
    verdict(4, "centroid cloud hull = discrete body; radial monotonicity",
            worst < 1e-3 && monotone, fmt("worst cloud gap %.2e", worst));
}

// 5. Convergence of random discrete bodies to Gamma_s of the cap.
void criterion5() {
    ExperimentConfig c;
    c.experiment = "convergence";
    c.seed = 2024;
    const ExperimentReport rep = run_convergence(c);
    double final_med = 0.0, decreasing = 0.0, improving = 0.0;
    for (const auto& [k, v] : rep.summary) {
        if (k == "final_median") final_med = v;
        if (k == "medians_strictly_decreasing") decreasing = v;
        if (k == "improving_fraction") improving = v;
    }
    const bool ok = decreasing > 0.5 && final_med < 0.05 && improving >= 0.95 &&
                    !rep.violation;
    verdict(5, "convergence: medians decrease, final < 0.05, >= 95% improve", ok,
            fmt("final median %.4f, improving %.2f", final_med, improving));
}

// 6. Spherical polar inequality: sigma of the polar of Gamma_s K is maximized
// by the tau-matched cap; zero violations over 200 bodies, equality for caps.
void criterion6() {
    ExperimentConfig c;
    c.experiment = "polar_bp";
    c.seed = 2025;
    const ExperimentReport rep = run_polar_bp(c);
    double violations = 1.0, cap_margin = 1.0;
    for (const auto& [k, v] : rep.summary) {
        if (k == "violations") violations = v;
        if (k == "cap_case_margin") cap_margin = v;
    }
    const double cap_rel = std::abs(cap_margin) / std::abs(rep.rows[0][4]);
    const bool ok = violations == 0.0 && cap_rel < 1e-6 && !rep.violation;
    verdict(6, "spherical polar inequality (200 bodies, cap equality)", ok,
            fmt("violations %.0f, cap margin rel %.2e", violations, cap_rel));
}

// 7. Euclidean precursor inequality for (psi, xi) and (lebesgue, lebesgue).
void criterion7() {
    bool ok = true;
    std::string detail;
    for (const auto& [mu, nu] : std::vector<std::pair<std::string, std::string>>{
             {"psi", "xi"}, {"lebesgue", "lebesgue"}}) {
        ExperimentConfig c;
        c.experiment = "euclid_polar_bp";
        c.seed = 2026;
        c.mu = mu;
        c.nu = nu;
        const ExperimentReport rep = run_euclid_polar_bp(c);
        double violations = 1.0, ball_margin = 1.0;
        for (const auto& [k, v] : rep.summary) {
            if (k == "violations") violations = v;
            if (k == "ball_case_margin") ball_margin = v;
        }
        const double ball_rel = std::abs(ball_margin) / std::abs(rep.rows[0][4]);
        ok = ok && violations == 0.0 && ball_rel < 1e-6 && !rep.violation;
        detail += mu + "/" + nu + fmt(": %.0f viol, ball rel %.2e  ", violations, ball_rel);
    }
    verdict(7, "euclidean polar inequality (200 polygons per density pair)", ok, detail);
}

// 8. Randomized discrete inequality with matched-mass ball reference.
void criterion8() {
    ExperimentConfig c;
    c.experiment = "randomized_ineq";
    c.seed = 2027;
    const ExperimentReport rep = run_randomized_ineq(c);
    bool rows_ok = true;
    for (const auto& row : rep.rows) rows_ok = rows_ok && row[6] == 1.0;
    double ball_zero = 0.0;
    for (const auto& [k, v] : rep.summary)
        if (k == "ball_case_ci_contains_zero") ball_zero = v;
    const bool ok = rows_ok && ball_zero == 1.0 && !rep.violation;
    verdict(8, "randomized inequality (10 bodies, ball CI contains zero)", ok,
            fmt("all rows pass %.0f, ball ci ok %.0f", rows_ok ? 1.0 : 0.0, ball_zero));
}

// 9. Support regularity proxy: h + h'' > 0 at every grid angle for Gamma_psi
// of 50 random bodies (second difference on the uniform angle grid).
void criterion9() {
    std::mt19937_64 rng(109);
    const DirectionGrid grid = DirectionGrid::make(2, 720);
    const WeightedDensity psi{DensityKind::psi, 2};
    const double dt = 2 * kPi / grid.resolution;
    double worst = 1e300;
    bool ok = true;
    for (int rep = 0; rep < 50; ++rep) {
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const EuclidBody body = random_symmetric_polygon(rng, 8, 0.95 * unif(rng), 0.8);
        const auto h = gamma_mu_supports(body, psi, grid);
        const int m = grid.resolution;
        for (int i = 0; i < m; ++i) {
            const double dd = (h[(i + 1) % m] - 2 * h[i] + h[(i + m - 1) % m]) / (dt * dt);
            const double val = h[i] + dd;
            worst = std::min(worst, val);
            ok = ok && val > 0.0;
        }
    }
    verdict(9, "support regularity h + h'' > 0 (50 bodies, full grid)", ok,
            fmt("min h + h'' = %.4f", worst));
}

// 10. Determinism: identical seeds give byte-identical trial records.
void criterion10() {
    ExperimentConfig c;
    c.experiment = "convergence";
    c.seed = 77;
    c.trials = 6;
    c.sample_sizes = {32, 128};
    c.grid_resolution = 360;
    const std::string a = run_experiment(c).trials_csv();
    const std::string b = run_experiment(c).trials_csv();
    ExperimentConfig p;
    p.experiment = "polar_bp";
    p.seed = 78;
    p.trials = 8;
    p.grid_resolution = 360;
    const std::string pa = run_polar_bp(p).trials_csv();
    const std::string pb = run_polar_bp(p).trials_csv();
    const bool ok = a == b && pa == pb;
    verdict(10, "byte-identical trials.csv across reruns", ok,
            fmt("convergence match %.0f, polar match %.0f", a == b ? 1.0 : 0.0,
                pa == pb ? 1.0 : 0.0));
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    std::printf("%s: %d of 10 criteria passed\n", failures == 0 ? "SUCCESS" : "FAILURE",
                10 - failures);
    return failures;
}
