#include "sphereoid/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numbers>
#include <thread>

#include "sphereoid/centroid.hpp"
#include "sphereoid/errors.hpp"
#include "sphereoid/polar_table.hpp"
#include "sphereoid/serialize.hpp"

namespace sphereoid {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZ99 = 2.5758293035489004;  // two-sided 99% normal quantile

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

double median_of(std::vector<double> v) {
    if (v.empty()) throw std::invalid_argument("median of empty set");
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return (v.size() % 2 == 1) ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

WeightedDensity density_from_name(const std::string& name, int dim) {
    return WeightedDensity{density_kind_from_string(name), dim};
}

void require_n2(const ExperimentConfig& c, const char* who) {
    if (c.n != 2)
        throw std::invalid_argument(std::string(who) + ": only n = 2 is supported");
}

/// Chart image of the convex hull of spherical centroids of endpoint tuples
/// along the generator chain. Each tuple picks u_i or its reflection u_i^e;
/// the chain orders the sign flips by generator angle, so the resulting
/// centroids sweep exactly the extreme points of the discrete body while
/// being computed genuinely on the sphere.
EuclidBody tilde_chain_image(const std::vector<UnitVector>& pts, const TangentFrame& frame) {
    const UnitVector& e = frame.center();
    const WeightedDensity phi{DensityKind::phi, frame.chart_dim()};
    const std::size_t n = pts.size();
    struct Oriented {
        double angle;
        std::size_t idx;
        double sign;  // orientation flip applied to land in the upper half-plane
    };
    std::vector<Oriented> order;
    order.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const ChartPoint x = project(frame, pts[i]);
        Vec g = scale(x, phi(x));
        double s = 1.0;
        if (g[1] < 0.0 || (g[1] == 0.0 && g[0] < 0.0)) s = -1.0;
        order.push_back({std::atan2(s * g[1], s * g[0]), i, s});
    }
    std::sort(order.begin(), order.end(),
              [](const Oriented& a, const Oriented& b) { return a.angle < b.angle; });
    // Walk the chain with an incrementally updated tuple sum: flipping
    // coordinate i replaces u_i^e by u_i, which adds u_i - u_i^e to the sum.
    std::vector<Vec> chart_pts;
    chart_pts.reserve(2 * (n + 1));
    Vec sum(e.ambient_dim(), 0.0);
    for (const Oriented& o : order) {
        const UnitVector r = o.sign > 0.0 ? reflect(pts[o.idx], e) : pts[o.idx];
        add_in_place(sum, r.coords(), 1.0);
    }
    auto emit = [&]() {
        const Vec x = project(frame, UnitVector(normalized(sum)));
        chart_pts.push_back(x);
        chart_pts.push_back(scale(x, -1.0));
    };
    emit();
    for (const Oriented& o : order) {
        const UnitVector& u = pts[o.idx];
        const UnitVector before = o.sign > 0.0 ? reflect(u, e) : u;
        const UnitVector after = o.sign > 0.0 ? u : reflect(u, e);
        add_in_place(sum, before.coords(), -1.0);
        add_in_place(sum, after.coords(), 1.0);
        emit();
    }
    EuclidBody b = convex_hull(chart_pts);
    b.symmetric = true;
    return b;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return splitmix64(seed ^ splitmix64(trial + 1));
}

int thread_budget() {
    if (const char* s = std::getenv("SPHEREOID_THREADS")) {
        const int v = std::atoi(s);
        if (v >= 1) return v;
    }
    const unsigned h = std::thread::hardware_concurrency();
    return h > 0 ? static_cast<int>(h) : 1;
}

void parallel_for(int count, const std::function<void(int)>& fn) {
    const int workers = std::min(count, thread_budget());
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&]() {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

std::vector<UnitVector> sample_uniform_in_body(const SphericalBody& k, int count,
                                               std::mt19937_64& rng) {
    if (count <= 0) throw std::invalid_argument("sample_uniform_in_body: count must be > 0");
    const int n = k.frame().chart_dim();
    const double R = std::min(k.circumradius() + 1e-9, kPi / 2.0 - 1e-7);
    const Rotation rot = Rotation::align(UnitVector::pole(n), k.center());
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double cosR = std::cos(R), sinR = std::sin(R);
    std::vector<UnitVector> out;
    out.reserve(count);
    long attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        ++attempts;
        if (attempts > 20000 &&
            static_cast<double>(out.size() + 1) / attempts < 1e-4)
            throw RejectionStall("sample_uniform_in_body: acceptance ratio below 1e-4");
        Vec p(n + 1, 0.0);
        if (n == 2) {
            const double z = 1.0 - unif(rng) * (1.0 - cosR);
            const double t = 2.0 * kPi * unif(rng);
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            p = Vec{r * std::cos(t), r * std::sin(t), z};
        } else {
            double col;
            for (;;) {
                col = R * unif(rng);
                if (unif(rng) <= std::pow(std::sin(col) / sinR, n - 1)) break;
            }
            Vec w(n);
            double wn = 0.0;
            while (wn < 1e-9) {
                for (double& x : w) x = gauss(rng);
                wn = norm(w);
            }
            for (int i = 0; i < n; ++i) p[i] = std::sin(col) * w[i] / wn;
            p[n] = std::cos(col);
        }
        UnitVector u = rot.apply(UnitVector(std::move(p)));
        if (body_contains(k, u)) out.push_back(std::move(u));
    }
    return out;
}

EuclidBody random_symmetric_polygon(std::mt19937_64& rng, int complexity,
                                    double eccentricity, double scale_param) {
    if (complexity < 3) throw std::invalid_argument("random_symmetric_polygon: complexity >= 3");
    if (!(eccentricity >= 0.0 && eccentricity < 1.0))
        throw std::invalid_argument("random_symmetric_polygon: eccentricity in [0,1)");
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    const double sector = kPi / complexity;
    std::vector<Vec> pts;
    pts.reserve(2 * complexity);
    for (int i = 0; i < complexity; ++i) {
        const double th = i * sector + eccentricity * 0.45 * sector * unif(rng);
        const double r = scale_param * (1.0 + 0.5 * eccentricity * unif(rng));
        pts.push_back(Vec{r * std::cos(th), r * std::sin(th)});
    }
    // Global anisotropy: squeeze along a random axis, vanishing at ecc = 0.
    const double axis = kPi * unif(rng);
    const double ratio = 1.0 / (1.0 + 1.5 * eccentricity * (0.5 + 0.5 * std::abs(unif(rng))));
    const double ca = std::cos(axis), sa = std::sin(axis);
    for (Vec& v : pts) {
        const double a = ca * v[0] + sa * v[1];
        const double b = -sa * v[0] + ca * v[1];
        v = Vec{ca * a - sa * ratio * b, sa * a + ca * ratio * b};
    }
    const std::size_t m = pts.size();
    for (std::size_t i = 0; i < m; ++i) pts.push_back(scale(pts[i], -1.0));
    EuclidBody b = convex_hull(pts);
    b.symmetric = true;
    const double limit = std::tan(kPi / 2.0 - 0.05);
    const double mx = b.max_vertex_norm();
    if (mx > limit)
        for (Vec& v : b.vertices) v = scale(v, 0.95 * limit / mx);
    return b;
}

SphericalBody random_symmetric_body(std::mt19937_64& rng, int complexity,
                                    double eccentricity, double scale_param) {
    EuclidBody image = random_symmetric_polygon(rng, complexity, eccentricity, scale_param);
    return SphericalBody(TangentFrame::at(UnitVector::pole(2)), std::move(image));
}

Vec sample_point_in_polygon(const EuclidBody& body, std::mt19937_64& rng) {
    const std::size_t m = body.vertices.size();
    if (body.dim() != 2 || m < 3)
        throw std::invalid_argument("sample_point_in_polygon: nondegenerate polygon required");
    std::vector<double> cum(m);
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        total += 0.5 * std::abs(cross2(body.vertices[i], body.vertices[(i + 1) % m]));
        cum[i] = total;
    }
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double pick = unif(rng) * total;
    const std::size_t i = static_cast<std::size_t>(
        std::lower_bound(cum.begin(), cum.end(), pick) - cum.begin());
    double r1 = unif(rng), r2 = unif(rng);
    if (r1 + r2 > 1.0) {
        r1 = 1.0 - r1;
        r2 = 1.0 - r2;
    }
    Vec p = scale(body.vertices[i % m], r1);
    add_in_place(p, body.vertices[(i + 1) % m], r2);
    return p;
}

Vec sample_density_in_polygon(const EuclidBody& body, const WeightedDensity& d,
                              std::mt19937_64& rng) {
    // The radial densities are all <= 1 with max at the origin, so plain
    // rejection against the uniform proposal works.
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int attempt = 0; attempt < 1000000; ++attempt) {
        Vec p = sample_point_in_polygon(body, rng);
        if (d.kind == DensityKind::lebesgue || unif(rng) <= d(p)) return p;
    }
    throw RejectionStall("sample_density_in_polygon: rejection stalled");
}

double regular_polygon_mass(int m, double circumradius, const WeightedDensity& d) {
    if (m < 3) throw std::invalid_argument("regular_polygon_mass: m >= 3");
    if (d.dim != 2) throw std::invalid_argument("regular_polygon_mass: n = 2 only");
    const double w = kPi / m;
    const double a = circumradius * std::cos(w);
    return 2.0 * m *
           adaptive_gauss_legendre(
               [&](double t) { return radial_primitive(d, d.dim - 1, a / std::cos(t)); }, 0.0,
               w, 1e-13);
}

double matched_regular_radius(int m, double target, const WeightedDensity& d) {
    if (!(target > 0.0)) throw TargetOutOfRange("matched_regular_radius: target must be > 0");
    double lo = 1e-9, hi = 1.0;
    while (regular_polygon_mass(m, hi, d) < target) {
        hi *= 1.5;
        if (hi > 1e8) throw TargetOutOfRange("matched_regular_radius: target unreachable");
    }
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        (regular_polygon_mass(m, mid, d) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> polygon_supports(const EuclidBody& body, const DirectionGrid& grid) {
    const std::vector<Vec>& v = body.vertices;
    const std::size_t m = v.size();
    std::vector<double> out(grid.directions.size());
    if (m == 0) throw std::invalid_argument("polygon_supports: empty body");
    if (m <= 2 || body.dim() != 2) {
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = support(body, grid.directions[k]);
        return out;
    }
    // Grid angles are sorted, so the support argmax only rotates forward.
    std::size_t j = 0;
    double best = dot(grid.directions[0], v[0]);
    for (std::size_t i = 1; i < m; ++i) {
        const double val = dot(grid.directions[0], v[i]);
        if (val > best) {
            best = val;
            j = i;
        }
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
        const Vec& u = grid.directions[k];
        double cur = dot(u, v[j]);
        for (std::size_t step = 0; step < m; ++step) {
            const double nxt = dot(u, v[(j + 1) % m]);
            if (nxt >= cur) {
                j = (j + 1) % m;
                cur = nxt;
            } else {
                break;
            }
        }
        out[k] = cur;
    }
    return out;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
    ExperimentConfig c;
    c.experiment = j.value("experiment", c.experiment);
    c.n = j.value("n", c.n);
    c.seed = j.value("seed", c.seed);
    c.trials = j.value("trials", c.trials);
    if (j.contains("sample_sizes")) c.sample_sizes = j.at("sample_sizes").get<std::vector<int>>();
    c.grid_resolution = j.value("grid_resolution", c.grid_resolution);
    c.cap_radius = j.value("cap_radius", c.cap_radius);
    c.complexity = j.value("complexity", c.complexity);
    c.eccentricity = j.value("eccentricity", c.eccentricity);
    c.base_scale = j.value("base_scale", c.base_scale);
    c.points_per_trial = j.value("points_per_trial", c.points_per_trial);
    c.mc_reps = j.value("mc_reps", c.mc_reps);
    c.mu = j.value("mu", c.mu);
    c.nu = j.value("nu", c.nu);
    c.eps_rel = j.value("eps_rel", c.eps_rel);
    c.eps_eq = j.value("eps_eq", c.eps_eq);
    c.final_tol = j.value("final_tol", c.final_tol);
    c.property_tol = j.value("property_tol", c.property_tol);
    c.with_tilde = j.value("with_tilde", c.with_tilde);
    return c;
}

nlohmann::json ExperimentConfig::to_json() const {
    return nlohmann::json{{"experiment", experiment},
                          {"n", n},
                          {"seed", seed},
                          {"trials", trials},
                          {"sample_sizes", sample_sizes},
                          {"grid_resolution", grid_resolution},
                          {"cap_radius", cap_radius},
                          {"complexity", complexity},
                          {"eccentricity", eccentricity},
                          {"base_scale", base_scale},
                          {"points_per_trial", points_per_trial},
                          {"mc_reps", mc_reps},
                          {"mu", mu},
                          {"nu", nu},
                          {"eps_rel", eps_rel},
                          {"eps_eq", eps_eq},
                          {"final_tol", final_tol},
                          {"property_tol", property_tol},
                          {"with_tilde", with_tilde}};
}

std::string ExperimentReport::trials_csv() const {
    std::string s;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) s += ',';
        s += columns[i];
    }
    s += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) s += ',';
            s += fmt(row[i]);
        }
        s += '\n';
    }
    return s;
}

std::string ExperimentReport::curve_csv() const {
    std::string s;
    for (std::size_t i = 0; i < curve_columns.size(); ++i) {
        if (i) s += ',';
        s += curve_columns[i];
    }
    s += '\n';
    for (const auto& row : curve) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) s += ',';
            s += fmt(row[i]);
        }
        s += '\n';
    }
    return s;
}

nlohmann::json ExperimentReport::to_json() const {
    nlohmann::json summary_json = nlohmann::json::object();
    for (const auto& [key, value] : summary) summary_json[key] = value;
    nlohmann::json curve_json = nlohmann::json::array();
    for (const auto& row : curve) curve_json.push_back(row);
    return nlohmann::json{{"config", config_echo},
                          {"columns", columns},
                          {"trial_count", rows.size()},
                          {"summary", summary_json},
                          {"curve_columns", curve_columns},
                          {"curve", curve_json},
                          {"notes", notes},
                          {"extra", extra},
                          {"passed", passed},
                          {"violation", violation},
                          {"wall_seconds", wall_seconds}};
}

void ExperimentReport::write(const std::string& dir) const {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    {
        std::ofstream f(fs::path(dir) / "report.json");
        f << to_json().dump(2) << '\n';
    }
    {
        std::ofstream f(fs::path(dir) / "trials.csv");
        f << trials_csv();
    }
    if (!curve.empty()) {
        std::ofstream f(fs::path(dir) / "curve.csv");
        f << curve_csv();
    }
}

ExperimentReport run_convergence(const ExperimentConfig& c0) {
    ExperimentConfig c = c0;
    if (c.trials <= 0) c.trials = 50;
    if (c.sample_sizes.empty()) c.sample_sizes = {64, 512, 4096};
    require_n2(c, "run_convergence");
    const auto t0 = Clock::now();

    const UnitVector e = UnitVector::pole(c.n);
    const SphericalBody target_body = cap_body(e, c.cap_radius, c.grid_resolution);
    const DirectionGrid grid = DirectionGrid::make(c.n, c.grid_resolution);
    const WeightedDensity psi{DensityKind::psi, c.n};
    const WeightedDensity phi{DensityKind::phi, c.n};
    const std::vector<double> target = gamma_mu_supports(target_body.image(), psi, grid);
    const WeightFn phi_weight = [phi](const ChartPoint& x) { return phi(x); };

    const int sizes = static_cast<int>(c.sample_sizes.size());
    const int max_n = *std::max_element(c.sample_sizes.begin(), c.sample_sizes.end());
    ExperimentReport rep;
    rep.config_echo = c.to_json();
    rep.columns = {"trial"};
    for (int ni : c.sample_sizes) {
        rep.columns.push_back("delta_" + std::to_string(ni));
        if (c.with_tilde) rep.columns.push_back("delta_tilde_" + std::to_string(ni));
    }
    rep.columns.push_back("distortion_bound");
    rep.rows.resize(c.trials);

    parallel_for(c.trials, [&](int t) {
        std::mt19937_64 rng(trial_seed(c.seed, t));
        const std::vector<UnitVector> all = sample_uniform_in_body(target_body, max_n, rng);
        std::vector<double> row{static_cast<double>(t)};
        double max_norm = target_body.image().max_vertex_norm();
        for (int ni : c.sample_sizes) {
            const std::vector<UnitVector> sub(all.begin(), all.begin() + ni);
            std::vector<ChartPoint> xs;
            xs.reserve(sub.size());
            for (const UnitVector& u : sub) xs.push_back(project(target_body.frame(), u));
            const EuclidBody gb = gamma_f_discrete(xs, phi_weight, /*allow_degenerate=*/true);
            max_norm = std::max(max_norm, gb.max_vertex_norm());
            double delta = 0.0;
            if (gb.degenerate) {
                for (std::size_t k = 0; k < grid.directions.size(); ++k)
                    delta = std::max(delta, std::abs(gamma_f_support(xs, phi_weight,
                                                                    grid.directions[k]) -
                                                     target[k]));
            } else {
                const std::vector<double> hs = polygon_supports(gb, grid);
                for (std::size_t k = 0; k < hs.size(); ++k)
                    delta = std::max(delta, std::abs(hs[k] - target[k]));
            }
            row.push_back(delta);
            if (c.with_tilde) {
                const EuclidBody tb = tilde_chain_image(sub, target_body.frame());
                const std::vector<double> hs = polygon_supports(tb, grid);
                double tdelta = 0.0;
                for (std::size_t k = 0; k < hs.size(); ++k)
                    tdelta = std::max(tdelta, std::abs(hs[k] - target[k]));
                row.push_back(tdelta);
            }
        }
        row.push_back(1.0 + max_norm * max_norm);
        rep.rows[t] = std::move(row);
    });

    // Median curve and the pass checks.
    rep.curve_columns = {"N", "median_delta"};
    if (c.with_tilde) rep.curve_columns.push_back("median_delta_tilde");
    const int stride = c.with_tilde ? 2 : 1;
    std::vector<double> medians(sizes), tilde_medians(sizes, 0.0);
    for (int s = 0; s < sizes; ++s) {
        std::vector<double> col, tcol;
        for (const auto& row : rep.rows) {
            col.push_back(row[1 + stride * s]);
            if (c.with_tilde) tcol.push_back(row[2 + stride * s]);
        }
        medians[s] = median_of(col);
        std::vector<double> crow{static_cast<double>(c.sample_sizes[s]), medians[s]};
        if (c.with_tilde) {
            tilde_medians[s] = median_of(tcol);
            crow.push_back(tilde_medians[s]);
        }
        rep.curve.push_back(std::move(crow));
    }
    bool decreasing = true;
    for (int s = 1; s < sizes; ++s)
        if (!(medians[s] < medians[s - 1])) decreasing = false;
    const bool final_ok = medians.back() < c.final_tol;
    int improving = 0;
    for (const auto& row : rep.rows)
        if (row[1 + stride * (sizes - 1)] < row[1]) ++improving;
    const double improving_frac = static_cast<double>(improving) / c.trials;

    rep.summary.emplace_back("final_median", medians.back());
    rep.summary.emplace_back("first_median", medians.front());
    rep.summary.emplace_back("medians_strictly_decreasing", decreasing ? 1.0 : 0.0);
    rep.summary.emplace_back("improving_fraction", improving_frac);
    if (c.with_tilde) rep.summary.emplace_back("final_median_tilde", tilde_medians.back());
    rep.passed = decreasing && final_ok && improving_frac >= 0.95;
    rep.violation = !rep.passed;
    rep.notes.push_back("delta is the chart support sup-difference, an upper bound for the "
                        "spherical Hausdorff distance; divide by distortion_bound for the "
                        "matching lower bound.");
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

namespace {

/// sigma(polar body of the psi-centroid body of `image`), the left/right
/// evaluation shared by the polar inequality experiments.
double sigma_of_polar_gamma(const EuclidBody& image, const DirectionGrid& grid) {
    const WeightedDensity psi{DensityKind::psi, image.dim()};
    const WeightedDensity xi{DensityKind::xi, image.dim()};
    return measure_chart_body(polar(gamma_mu_body(image, psi, grid)), xi);
}

}  // namespace

ExperimentReport run_polar_bp(const ExperimentConfig& c0) {
    ExperimentConfig c = c0;
    if (c.trials <= 0) c.trials = 200;
    require_n2(c, "run_polar_bp");
    const auto t0 = Clock::now();
    const UnitVector e = UnitVector::pole(c.n);
    const DirectionGrid grid = DirectionGrid::make(c.n, c.grid_resolution);
    const WeightedDensity psi{DensityKind::psi, c.n};

    ExperimentReport rep;
    rep.config_echo = c.to_json();
    rep.columns = {"trial", "eccentricity", "tau_K", "left", "right", "margin", "violation"};
    rep.rows.resize(c.trials);

    parallel_for(c.trials, [&](int t) {
        std::mt19937_64 rng(trial_seed(c.seed, t));
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        double ecc = 0.0;
        SphericalBody k = [&]() {
            if (t == 0) return cap_body(e, c.cap_radius, c.grid_resolution);
            ecc = c.eccentricity * unif(rng);
            return random_symmetric_body(rng, c.complexity, ecc, c.base_scale);
        }();
        const double tau_k = tau_body(k);
        const double left = sigma_body(spherical_polar(gamma_s(k, grid)));
        // Matched cap, discretized exactly like every other body: the regular
        // grid_resolution-gon whose psi-mass equals tau(K).
        const double cap_r = matched_regular_radius(c.grid_resolution, tau_k, psi);
        const SphericalBody cap_k(TangentFrame::at(k.center()),
                                  regular_polygon(c.grid_resolution, cap_r));
        const double right = sigma_body(spherical_polar(gamma_s(cap_k, grid)));
        const double margin = right - left;
        const bool viol = margin < -c.eps_rel * std::abs(right);
        rep.rows[t] = {static_cast<double>(t), ecc, tau_k, left, right, margin,
                       viol ? 1.0 : 0.0};
    });

    int violations = 0;
    double min_margin = 1e300;
    for (const auto& row : rep.rows) {
        violations += row[6] > 0.5 ? 1 : 0;
        min_margin = std::min(min_margin, row[5]);
    }
    const double cap_margin = rep.rows[0][5];
    const bool equality_ok = std::abs(cap_margin) < c.eps_eq;
    rep.summary.emplace_back("violations", violations);
    rep.summary.emplace_back("min_margin", min_margin);
    rep.summary.emplace_back("cap_case_margin", cap_margin);
    rep.passed = violations == 0 && equality_ok;
    rep.violation = !rep.passed;
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

ExperimentReport run_euclid_polar_bp(const ExperimentConfig& c0) {
    ExperimentConfig c = c0;
    if (c.trials <= 0) c.trials = 200;
    require_n2(c, "run_euclid_polar_bp");
    const auto t0 = Clock::now();
    const DirectionGrid grid = DirectionGrid::make(c.n, c.grid_resolution);
    const WeightedDensity mu = density_from_name(c.mu, c.n);
    const WeightedDensity nu = density_from_name(c.nu, c.n);

    ExperimentReport rep;
    rep.config_echo = c.to_json();
    rep.columns = {"trial", "eccentricity", "mu_mass", "left", "right", "margin", "violation"};
    rep.rows.resize(c.trials);

    parallel_for(c.trials, [&](int t) {
        std::mt19937_64 rng(trial_seed(c.seed, t));
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        double ecc = 0.0;
        EuclidBody l;
        if (t == 0) {
            l = regular_polygon(c.grid_resolution, c.base_scale);
        } else {
            ecc = c.eccentricity * unif(rng);
            l = random_symmetric_polygon(rng, c.complexity, ecc, c.base_scale);
        }
        const double mass = measure_chart_body(l, mu);
        const double left = measure_chart_body(polar(gamma_mu_body(l, mu, grid)), nu);
        const double ball_r = matched_regular_radius(c.grid_resolution, mass, mu);
        const EuclidBody ball = regular_polygon(c.grid_resolution, ball_r);
        const double right = measure_chart_body(polar(gamma_mu_body(ball, mu, grid)), nu);
        const double margin = right - left;
        const bool viol = margin < -c.eps_rel * std::abs(right);
        rep.rows[t] = {static_cast<double>(t), ecc, mass, left, right, margin,
                       viol ? 1.0 : 0.0};
    });

    int violations = 0;
    double min_margin = 1e300;
    for (const auto& row : rep.rows) {
        violations += row[6] > 0.5 ? 1 : 0;
        min_margin = std::min(min_margin, row[5]);
    }
    const double ball_margin = rep.rows[0][5];
    const bool equality_ok = std::abs(ball_margin) < c.eps_eq;
    rep.summary.emplace_back("violations", violations);
    rep.summary.emplace_back("min_margin", min_margin);
    rep.summary.emplace_back("ball_case_margin", ball_margin);
    rep.passed = violations == 0 && equality_ok;
    rep.violation = !rep.passed;
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

ExperimentReport run_randomized_ineq(const ExperimentConfig& c0) {
    ExperimentConfig c = c0;
    if (c.trials <= 0) c.trials = 10;
    require_n2(c, "run_randomized_ineq");
    if (c.points_per_trial < c.n + 1)
        throw std::invalid_argument("run_randomized_ineq: need N >= n + 1 points");
    const auto t0 = Clock::now();
    const WeightedDensity mu = density_from_name(c.mu, c.n);
    const WeightedDensity nu = density_from_name(c.nu, c.n);
    const int ball_m = 64;  // matched-ball polygon resolution for sampling
    const WeightFn unit_weight = [](const ChartPoint&) { return 1.0; };

    ExperimentReport rep;
    rep.config_echo = c.to_json();
    rep.columns = {"body",       "eccentricity", "mean_L", "mean_B",
                   "difference", "ci99",         "passes", "resampled"};
    rep.rows.resize(c.trials);

    // Bodies are prepared up front; the Monte Carlo loop is flattened over
    // (body, rep) pairs with one RNG stream per pair.
    std::vector<EuclidBody> bodies(c.trials), balls(c.trials);
    std::vector<double> eccs(c.trials, 0.0);
    for (int t = 0; t < c.trials; ++t) {
        std::mt19937_64 rng(trial_seed(c.seed, t));
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        if (t == 0) {
            bodies[t] = regular_polygon(ball_m, c.base_scale);
        } else {
            eccs[t] = c.eccentricity * unif(rng);
            bodies[t] = random_symmetric_polygon(rng, c.complexity, eccs[t], c.base_scale);
        }
        const double mass = measure_chart_body(bodies[t], mu);
        balls[t] = regular_polygon(ball_m, matched_regular_radius(ball_m, mass, mu));
    }

    const int reps = c.mc_reps;
    std::vector<std::vector<double>> vl(c.trials, std::vector<double>(reps));
    std::vector<std::vector<double>> vb(c.trials, std::vector<double>(reps));
    std::vector<std::atomic<long>> resampled(c.trials);
    for (auto& r : resampled) r.store(0);

    auto one_side = [&](const EuclidBody& source, std::mt19937_64& rng, int t) {
        for (;;) {
            std::vector<ChartPoint> xs;
            xs.reserve(c.points_per_trial);
            for (int i = 0; i < c.points_per_trial; ++i)
                xs.push_back(sample_density_in_polygon(source, mu, rng));
            try {
                const EuclidBody g = gamma_f_discrete(xs, unit_weight);
                return measure_chart_body(polar(g), nu);
            } catch (const DegenerateHull&) {
                resampled[t].fetch_add(1);
            }
        }
    };

    parallel_for(c.trials * reps, [&](int idx) {
        const int t = idx / reps;
        const int r = idx % reps;
        std::mt19937_64 rng(trial_seed(c.seed,
                                       (static_cast<std::uint64_t>(t) << 32) | (r + 7)));
        vl[t][r] = one_side(bodies[t], rng, t);
        vb[t][r] = one_side(balls[t], rng, t);
    });

    bool all_pass = true;
    for (int t = 0; t < c.trials; ++t) {
        double ml = 0.0, mb = 0.0;
        for (int r = 0; r < reps; ++r) {
            ml += vl[t][r];
            mb += vb[t][r];
        }
        ml /= reps;
        mb /= reps;
        double sl = 0.0, sb = 0.0;
        for (int r = 0; r < reps; ++r) {
            sl += (vl[t][r] - ml) * (vl[t][r] - ml);
            sb += (vb[t][r] - mb) * (vb[t][r] - mb);
        }
        sl /= (reps - 1);
        sb /= (reps - 1);
        const double ci = kZ99 * std::sqrt(sl / reps + sb / reps);
        const double diff = mb - ml;
        const bool pass = diff > -ci;
        all_pass = all_pass && pass;
        rep.rows[t] = {static_cast<double>(t), eccs[t], ml,
                       mb,                     diff,    ci,
                       pass ? 1.0 : 0.0,       static_cast<double>(resampled[t].load())};
        if (t == 0) {
            rep.summary.emplace_back("ball_case_diff", diff);
            rep.summary.emplace_back("ball_case_ci99", ci);
            rep.summary.emplace_back("ball_case_ci_contains_zero",
                                     std::abs(diff) <= ci ? 1.0 : 0.0);
            all_pass = all_pass && std::abs(diff) <= ci;
        }
    }
    long total_resampled = 0;
    for (auto& r : resampled) total_resampled += r.load();
    rep.summary.emplace_back("resampled_total", static_cast<double>(total_resampled));
    rep.passed = all_pass;
    rep.violation = !rep.passed;
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

ExperimentReport run_open_problem(const ExperimentConfig& c0) {
    ExperimentConfig c = c0;
    if (c.trials <= 0) c.trials = 100;
    require_n2(c, "run_open_problem");
    const auto t0 = Clock::now();
    const UnitVector e = UnitVector::pole(c.n);
    const DirectionGrid grid = DirectionGrid::make(c.n, c.grid_resolution);
    const WeightedDensity xi{DensityKind::xi, c.n};

    ExperimentReport rep;
    rep.config_echo = c.to_json();
    rep.columns = {"trial", "eccentricity", "sigma_K", "sigma_gamma_K", "sigma_gamma_cap",
                   "margin", "candidate"};
    rep.rows.resize(c.trials);
    std::vector<SphericalBody> kept;
    kept.reserve(c.trials);
    for (int t = 0; t < c.trials; ++t)
        kept.push_back(cap_body(e, c.cap_radius, c.grid_resolution));

    parallel_for(c.trials, [&](int t) {
        std::mt19937_64 rng(trial_seed(c.seed, t));
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        double ecc = 0.0;
        if (t != 0) {
            ecc = c.eccentricity * unif(rng);
            kept[t] = random_symmetric_body(rng, c.complexity, ecc, c.base_scale);
        }
        const SphericalBody& k = kept[t];
        const double sigma_k = sigma_body(k);
        const double left = sigma_body(gamma_s(k, grid));
        const double cap_r = matched_regular_radius(c.grid_resolution, sigma_k, xi);
        const SphericalBody cap_k(TangentFrame::at(k.center()),
                                  regular_polygon(c.grid_resolution, cap_r));
        const double right = sigma_body(gamma_s(cap_k, grid));
        const double margin = left - right;  // conjectured >= 0
        const bool candidate = margin < -c.eps_rel * std::abs(right);
        rep.rows[t] = {static_cast<double>(t), ecc,    sigma_k,
                       left,                   right,  margin,
                       candidate ? 1.0 : 0.0};
    });

    double min_margin = 1e300;
    int argmin = 0, candidates = 0;
    for (int t = 0; t < c.trials; ++t) {
        if (rep.rows[t][5] < min_margin) {
            min_margin = rep.rows[t][5];
            argmin = t;
        }
        candidates += rep.rows[t][6] > 0.5 ? 1 : 0;
    }
    rep.summary.emplace_back("min_margin", min_margin);
    rep.summary.emplace_back("min_margin_trial", argmin);
    rep.summary.emplace_back("candidates", candidates);
    rep.summary.emplace_back("cap_case_margin", rep.rows[0][5]);
    rep.extra["min_margin_body"] = to_json(kept[argmin]);
    if (candidates > 0) {
        nlohmann::json arr = nlohmann::json::array();
        for (int t = 0; t < c.trials; ++t)
            if (rep.rows[t][6] > 0.5) arr.push_back(to_json(kept[t]));
        rep.extra["candidate_bodies"] = arr;
        rep.notes.push_back("candidate counterexample - verify at higher resolution");
    }
    rep.notes.push_back("exploratory: no inequality is asserted; margins reported for "
                        "inspection only");
    // Only the analytic equality case is gated; negative random margins are
    // findings, not failures.
    rep.passed = std::abs(rep.rows[0][5]) < c.eps_eq;
    rep.violation = false;
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

namespace {

struct Property {
    std::string name;
    int trials;
    double tol_scale;  // multiplies the configured tolerance
    std::function<bool(std::mt19937_64&, double)> check;
};

std::vector<Property> build_properties(const ExperimentConfig& c) {
    const DirectionGrid grid = DirectionGrid::make(2, c.grid_resolution);
    std::vector<Property> props;

    props.push_back({"rotation-invariant-distance", 100, 10.0, [](std::mt19937_64& rng, double tol) {
        std::normal_distribution<double> gauss;
        auto rand_unit = [&]() {
            Vec v(3);
            for (double& x : v) x = gauss(rng);
            return UnitVector(normalized(v));
        };
        const UnitVector u = rand_unit(), v = rand_unit();
        const Rotation rot = Rotation::random(3, rng);
        return std::abs(spherical_distance(rot.apply(u), rot.apply(v)) -
                        spherical_distance(u, v)) <= tol;
    }});

    props.push_back({"reflection-involution", 100, 10.0, [](std::mt19937_64& rng, double tol) {
        std::normal_distribution<double> gauss;
        auto rand_unit = [&]() {
            Vec v(3);
            for (double& x : v) x = gauss(rng);
            return UnitVector(normalized(v));
        };
        const UnitVector v = rand_unit(), e = rand_unit(), w = rand_unit();
        const UnitVector twice = reflect(reflect(v, e), e);
        const bool involution = dist(twice.coords(), v.coords()) <= tol;
        const bool isometry = std::abs(spherical_distance(reflect(v, e), reflect(w, e)) -
                                       spherical_distance(v, w)) <= tol;
        return involution && isometry;
    }});

    props.push_back({"chart-roundtrip", 100, 10.0, [](std::mt19937_64& rng, double tol) {
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        std::normal_distribution<double> gauss;
        Vec c(3);
        for (double& x : c) x = gauss(rng);
        const TangentFrame f = TangentFrame::at(UnitVector(normalized(c)));
        const Vec x{3.0 * (unif(rng) - 0.5), 3.0 * (unif(rng) - 0.5)};
        const UnitVector u = unproject(f, x);
        const Vec back = project(f, u);
        const double phi_val = WeightedDensity{DensityKind::phi, 2}(x);
        const double align = dot(u.coords(), f.center().coords());
        return dist(back, x) <= tol && std::abs(phi_val - align) <= tol;
    }});

    props.push_back({"density-factorization", 100, 10.0, [](std::mt19937_64& rng, double tol) {
        std::uniform_real_distribution<double> unif(0.0, 4.0);
        const WeightedDensity xi{DensityKind::xi, 2}, phi{DensityKind::phi, 2},
            psi{DensityKind::psi, 2};
        const double r1 = unif(rng), r2 = unif(rng);
        const double lo = std::min(r1, r2), hi = std::max(r1, r2) + 1e-6;
        const bool factor = std::abs(psi.radial(r1) - phi.radial(r1) * xi.radial(r1)) <= tol;
        const bool decreasing = xi.radial(lo) >= xi.radial(hi) &&
                                phi.radial(lo) >= phi.radial(hi) &&
                                psi.radial(lo) >= psi.radial(hi);
        return factor && decreasing;
    }});

    props.push_back({"polar-involution", 50, 10.0, [](std::mt19937_64& rng, double tol) {
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const EuclidBody l = random_symmetric_polygon(rng, 6, 0.8 * unif(rng), 0.9);
        const EuclidBody ll = polar(polar(l));
        const DirectionGrid g = DirectionGrid::make(2, 256);
        return euclid_hausdorff(l, ll, g) <= tol * std::max(1.0, l.max_vertex_norm());
    }});

    props.push_back({"radial-support-duality", 50, 10.0, [](std::mt19937_64& rng, double tol) {
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const EuclidBody l = random_symmetric_polygon(rng, 6, 0.8 * unif(rng), 0.9);
        const EuclidBody lp = polar(l);
        const double th = 2.0 * kPi * unif(rng);
        const Vec v{std::cos(th), std::sin(th)};
        return std::abs(support(lp, v) - 1.0 / radial(l, v)) <= tol;
    }});

    props.push_back({"supports-reconstruction", 30, 10.0, [grid](std::mt19937_64& rng, double tol) {
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const EuclidBody l = random_symmetric_polygon(rng, 5, 0.7 * unif(rng), 0.9);
        const EuclidBody back = body_from_supports(grid, polygon_supports(l, grid));
        double worst = 0.0;
        const std::vector<double> ha = polygon_supports(l, grid);
        const std::vector<double> hb = polygon_supports(back, grid);
        for (std::size_t k = 0; k < ha.size(); ++k)
            worst = std::max(worst, std::abs(ha[k] - hb[k]));
        return worst <= tol;
    }});

    props.push_back({"discrete-centroid-projection", 100, 10.0, [](std::mt19937_64& rng, double tol) {
        // The chart identity for tuples: project(c_s(u_1..u_m)) equals the
        // phi-weighted average of the projections.
        std::uniform_int_distribution<int> cnt(2, 8);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const TangentFrame f = TangentFrame::at(UnitVector::pole(2));
        const WeightedDensity phi{DensityKind::phi, 2};
        const int m = cnt(rng);
        std::vector<UnitVector> tuple;
        std::vector<ChartPoint> xs;
        for (int i = 0; i < m; ++i) {
            const double r = 2.0 * unif(rng), th = 2.0 * kPi * unif(rng);
            const Vec x{r * std::cos(th), r * std::sin(th)};
            xs.push_back(x);
            tuple.push_back(unproject(f, x));
        }
        const Vec via_sphere = project(f, c_s_discrete(tuple));
        const Vec via_chart = c_f_discrete(xs, [&](const ChartPoint& x) { return phi(x); });
        return dist(via_sphere, via_chart) <= tol;
    }});

    props.push_back({"gamma-s-equivariance", 20, 200.0, [grid](std::mt19937_64& rng, double tol) {
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const SphericalBody k = random_symmetric_body(rng, 6, 0.7 * unif(rng), 0.7);
        const Rotation rot = Rotation::random(3, rng);
        if (dot(rot.apply(k.center()).coords(), Vec{0.0, 0.0, 1.0}) < -1.0 + 1e-6)
            return true;  // skip the antipodal corner of align()
        // Rebuild the rotated body from scratch in the canonical frame at the
        // rotated center, then compare Gamma_s computed both ways.
        const UnitVector ce = rot.apply(k.center());
        const TangentFrame f2 = TangentFrame::at(ce);
        std::vector<Vec> verts;
        for (const Vec& v : k.image().vertices)
            verts.push_back(project(f2, rot.apply(unproject(k.frame(), v))));
        const SphericalBody k2(f2, convex_hull(verts));
        const SphericalBody a = gamma_s(k2, grid);
        const SphericalBody b = rotate_spherical_body(rot, gamma_s(k, grid));
        // Same center; express b's image in a's basis and compare supports.
        const double w00 = dot(a.frame().basis()[0], b.frame().basis()[0]);
        const double w01 = dot(a.frame().basis()[0], b.frame().basis()[1]);
        const double w10 = dot(a.frame().basis()[1], b.frame().basis()[0]);
        const double w11 = dot(a.frame().basis()[1], b.frame().basis()[1]);
        EuclidBody bimg = b.image();
        for (Vec& v : bimg.vertices)
            v = Vec{w00 * v[0] + w01 * v[1], w10 * v[0] + w11 * v[1]};
        const DirectionGrid g = DirectionGrid::make(2, 256);
        return euclid_hausdorff(a.image(), bimg, g) <= tol;
    }});

    props.push_back({"zonotope-walk-vs-enumeration", 40, 100.0, [](std::mt19937_64& rng, double tol) {
        std::uniform_int_distribution<int> cnt(13, 40);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const WeightedDensity phi{DensityKind::phi, 2};
        const WeightFn f = [&](const ChartPoint& x) { return phi(x); };
        const int m = cnt(rng);
        std::vector<ChartPoint> xs;
        for (int i = 0; i < m; ++i) {
            const double r = 2.0 * unif(rng), th = 2.0 * kPi * unif(rng);
            xs.push_back(Vec{r * std::cos(th), r * std::sin(th)});
        }
        const EuclidBody walk = gamma_f_discrete(xs, f);
        const DirectionGrid g = DirectionGrid::make(2, 128);
        double worst = 0.0;
        for (const Vec& u : g.directions)
            worst = std::max(worst, std::abs(support(walk, u) - gamma_f_support(xs, f, u)));
        return worst <= tol * 1e-8;  // exact construction: machine precision
    }});

    props.push_back({"cap-measure-quadrature", 50, 100.0, [](std::mt19937_64& rng, double tol) {
        std::uniform_real_distribution<double> unif(0.1, 1.4);
        const double r = unif(rng);
        const WeightedDensity xi{DensityKind::xi, 2};
        const double quad = 2.0 * kPi *
                            adaptive_gauss_legendre(
                                [&](double s) { return s * xi.radial(s); }, 0.0, std::tan(r),
                                1e-13);
        return std::abs(quad - 2.0 * kPi * (1.0 - std::cos(r))) <= tol;
    }});

    props.push_back({"polar-bp-ball-equality", 10, 100.0, [grid](std::mt19937_64& rng, double tol) {
        std::uniform_real_distribution<double> unif(0.4, 1.2);
        const WeightedDensity mu{DensityKind::psi, 2}, nu{DensityKind::xi, 2};
        const EuclidBody l = regular_polygon(grid.resolution, unif(rng));
        const double mass = measure_chart_body(l, mu);
        const EuclidBody ball =
            regular_polygon(grid.resolution, matched_regular_radius(grid.resolution, mass, mu));
        const double left = measure_chart_body(polar(gamma_mu_body(l, mu, grid)), nu);
        const double right = measure_chart_body(polar(gamma_mu_body(ball, mu, grid)), nu);
        return std::abs(right - left) <= tol;
    }});

    props.push_back({"polarity-preserves-hausdorff", 50, 100.0, [](std::mt19937_64& rng, double tol) {
        // Concentric caps: delta_s(C_r1, C_r2) = |r1 - r2| and the spherical
        // polars are concentric caps with the same radial gap.
        std::uniform_real_distribution<double> unif(0.3, 1.2);
        const double r1 = unif(rng), r2 = unif(rng);
        const UnitVector e = UnitVector::pole(2);
        const SphericalBody a = cap_body(e, r1, 720), b = cap_body(e, r2, 720);
        auto radial_gap = [](const SphericalBody& x, const SphericalBody& y) {
            const PolygonRays rx(x.image()), ry(y.image());
            double worst = 0.0;
            for (int k = 0; k < 720; ++k) {
                const double th = 2.0 * kPi * k / 720.0;
                worst = std::max(worst,
                                 std::abs(std::atan(rx.rho(th)) - std::atan(ry.rho(th))));
            }
            return worst;
        };
        const double direct = radial_gap(a, b);
        const double polarized = radial_gap(spherical_polar(a), spherical_polar(b));
        return std::abs(direct - polarized) <= tol && std::abs(direct - std::abs(r1 - r2)) <= tol;
    }});

    props.push_back({"sampling-determinism", 5, 1.0, [](std::mt19937_64& rng, double) {
        const std::uint64_t s = rng();
        const SphericalBody k = cap_body(UnitVector::pole(2), 0.6, 128);
        std::mt19937_64 r1(s), r2(s);
        const auto a = sample_uniform_in_body(k, 50, r1);
        const auto b = sample_uniform_in_body(k, 50, r2);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].coords() != b[i].coords()) return false;
        return true;
    }});

    props.push_back({"gamma-support-regularity", 20, 1.0, [grid](std::mt19937_64& rng, double) {
        // Discrete strict-convexity proxy: h + h'' > 0 on the support grid.
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const EuclidBody l = random_symmetric_polygon(rng, 6, 0.9 * unif(rng), 0.8);
        const WeightedDensity psi{DensityKind::psi, 2};
        const std::vector<double> h = gamma_mu_supports(l, psi, grid);
        const double dt = 2.0 * kPi / grid.resolution;
        const std::size_t m = h.size();
        for (std::size_t k = 0; k < m; ++k) {
            const double hpp = (h[(k + 1) % m] - 2.0 * h[k] + h[(k + m - 1) % m]) / (dt * dt);
            if (!(h[k] + hpp > 0.0)) return false;
        }
        return true;
    }});

    return props;
}

}  // namespace

ExperimentReport run_property_suite(const ExperimentConfig& c0) {
    ExperimentConfig c = c0;
    require_n2(c, "run_property_suite");
    const auto t0 = Clock::now();
    const std::vector<Property> props = build_properties(c);

    ExperimentReport rep;
    rep.config_echo = c.to_json();
    rep.columns = {"property", "passed", "total"};
    rep.rows.resize(props.size());

    parallel_for(static_cast<int>(props.size()), [&](int p) {
        const Property& prop = props[p];
        std::mt19937_64 rng(trial_seed(c.seed, 1000 + p));
        int ok = 0;
        for (int t = 0; t < prop.trials; ++t)
            if (prop.check(rng, c.property_tol * prop.tol_scale)) ++ok;
        rep.rows[p] = {static_cast<double>(p), static_cast<double>(ok),
                       static_cast<double>(prop.trials)};
    });

    bool all = true;
    for (std::size_t p = 0; p < props.size(); ++p) {
        const int ok = static_cast<int>(rep.rows[p][1]);
        const int total = static_cast<int>(rep.rows[p][2]);
        rep.notes.push_back(props[p].name + ": " + std::to_string(ok) + "/" +
                            std::to_string(total));
        if (ok != total) all = false;
    }
    rep.summary.emplace_back("properties", static_cast<double>(props.size()));
    rep.summary.emplace_back("all_passed", all ? 1.0 : 0.0);
    rep.passed = all;
    rep.violation = !all;
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

ExperimentReport run_experiment(const ExperimentConfig& c) {
    if (c.experiment == "convergence") return run_convergence(c);
    if (c.experiment == "polar_bp") return run_polar_bp(c);
    if (c.experiment == "euclid_polar_bp") return run_euclid_polar_bp(c);
    if (c.experiment == "randomized_ineq") return run_randomized_ineq(c);
    if (c.experiment == "open_problem") return run_open_problem(c);
    if (c.experiment == "property_suite") return run_property_suite(c);
    throw std::invalid_argument("unknown experiment: " + c.experiment);
}

}  // namespace sphereoid
