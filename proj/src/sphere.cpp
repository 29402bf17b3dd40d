#include "sphereoid/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sphereoid/errors.hpp"

namespace sphereoid {

namespace {
constexpr double kPi = std::numbers::pi;
}

UnitVector::UnitVector(Vec coords) : coords_(std::move(coords)) {
    if (coords_.size() < 3)
        throw std::invalid_argument("UnitVector: ambient dimension must be >= 3");
    const double n = norm(coords_);
    if (std::abs(n - 1.0) > 1e-9)
        throw std::invalid_argument("UnitVector: norm deviates from 1");
    // Renormalize so downstream invariants hold at 1e-12 after op chains.
    if (std::abs(n - 1.0) > kUnitNormTol)
        for (double& x : coords_) x /= n;
}

UnitVector UnitVector::negated() const { return UnitVector(scale(coords_, -1.0)); }

UnitVector UnitVector::pole(int sphere_dim) {
    Vec c(sphere_dim + 1, 0.0);
    c.back() = 1.0;
    return UnitVector(c);
}

SphericalCap::SphericalCap(UnitVector c, double r) : center(std::move(c)), radius(r) {
    if (!(radius > 0.0) || radius > kPi / 2.0 + 1e-15)
        throw std::invalid_argument("SphericalCap: radius must lie in (0, pi/2]");
}

Rotation::Rotation(std::vector<Vec> rows) : rows_(std::move(rows)) {
    const std::size_t d = rows_.size();
    for (const Vec& r : rows_)
        if (r.size() != d) throw std::invalid_argument("Rotation: matrix not square");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            const double target = (i == j) ? 1.0 : 0.0;
            if (std::abs(dot(rows_[i], rows_[j]) - target) > 1e-10)
                throw std::invalid_argument("Rotation: matrix not orthogonal");
        }
}

Vec Rotation::apply(const Vec& v) const {
    Vec r(rows_.size(), 0.0);
    for (std::size_t i = 0; i < rows_.size(); ++i) r[i] = dot(rows_[i], v);
    return r;
}

UnitVector Rotation::apply(const UnitVector& u) const {
    return UnitVector(apply(u.coords()));
}

Rotation Rotation::identity(int d) {
    std::vector<Vec> rows(d, Vec(d, 0.0));
    for (int i = 0; i < d; ++i) rows[i][i] = 1.0;
    return Rotation(std::move(rows));
}

Rotation Rotation::random(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Vec> rows;
    rows.reserve(d);
    while (static_cast<int>(rows.size()) < d) {
        Vec v(d);
        for (double& x : v) x = gauss(rng);
        for (const Vec& r : rows) add_in_place(v, r, -dot(v, r));
        const double n = norm(v);
        if (n < 1e-6) continue;  // retry near-dependent draw
        rows.push_back(scale(v, 1.0 / n));
    }
    return Rotation(std::move(rows));
}

Rotation Rotation::align(const UnitVector& a, const UnitVector& b) {
    const int d = a.ambient_dim();
    const Vec& va = a.coords();
    const Vec& vb = b.coords();
    const double c = std::clamp(dot(va, vb), -1.0, 1.0);
    if (c < -1.0 + 1e-14)
        throw std::invalid_argument("Rotation::align: antipodal pair has no canonical rotation");
    // Householder-free rank-2 update: R = I + (b a^T - a b^T) + k (b a^T - a b^T)^2
    // is awkward for general d; use Gram-Schmidt plane rotation instead.
    Vec w = sub(vb, scale(va, c));
    const double wn = norm(w);
    std::vector<Vec> rows(d, Vec(d, 0.0));
    for (int i = 0; i < d; ++i) rows[i][i] = 1.0;
    if (wn < 1e-15) return Rotation(std::move(rows));
    w = scale(w, 1.0 / wn);
    const double s = wn;  // sin of the angle between a and b
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            rows[i][j] += (c - 1.0) * (va[i] * va[j] + w[i] * w[j]) +
                          s * (w[i] * va[j] - va[i] * w[j]);
    return Rotation(std::move(rows));
}

double spherical_distance(const UnitVector& u, const UnitVector& v) {
    return std::acos(std::clamp(dot(u.coords(), v.coords()), -1.0, 1.0));
}

UnitVector reflect(const UnitVector& v, const UnitVector& e) {
    Vec r = scale(v.coords(), -1.0);
    add_in_place(r, e.coords(), 2.0 * dot(v.coords(), e.coords()));
    return UnitVector(normalized(r));
}

UnitVector geodesic_point(const UnitVector& a, const UnitVector& b, double t) {
    const double ang = spherical_distance(a, b);
    if (ang < 1e-14) return a;
    const double sa = std::sin((1.0 - t) * ang) / std::sin(ang);
    const double sb = std::sin(t * ang) / std::sin(ang);
    Vec r = scale(a.coords(), sa);
    add_in_place(r, b.coords(), sb);
    return UnitVector(normalized(r));
}

double spherical_hausdorff(const std::vector<UnitVector>& a,
                           const std::vector<UnitVector>& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("spherical_hausdorff: empty sample set");
    auto directed = [](const std::vector<UnitVector>& p, const std::vector<UnitVector>& q) {
        double worst = 0.0;
        for (const UnitVector& x : p) {
            double best = kPi;
            for (const UnitVector& y : q) best = std::min(best, spherical_distance(x, y));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

std::vector<UnitVector> cap_boundary_samples(const SphericalCap& cap, int m) {
    const int n = cap.center.sphere_dim();
    if (m < std::max(3, n + 1))
        throw std::invalid_argument("cap_boundary_samples: too few samples requested");
    // Build points at angle `radius` from the pole, then rotate pole -> center.
    const double cr = std::cos(cap.radius);
    const double sr = std::sin(cap.radius);
    const Rotation rot = Rotation::align(UnitVector::pole(n), cap.center);
    std::vector<UnitVector> out;
    out.reserve(m);
    if (n == 2) {
        for (int k = 0; k < m; ++k) {
            const double t = 2.0 * kPi * k / m;
            out.push_back(rot.apply(UnitVector(Vec{sr * std::cos(t), sr * std::sin(t), cr})));
        }
    } else {
        // Boundary is an (n-1)-sphere: quasi-uniform via seeded Gaussians.
        std::mt19937_64 rng(0x5eedc0deULL + static_cast<std::uint64_t>(m));
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int k = 0; k < m; ++k) {
            Vec v(n, 0.0);
            do {
                for (double& x : v) x = gauss(rng);
            } while (norm(v) < 1e-9);
            v = normalized(v);
            Vec amb(n + 1, 0.0);
            for (int i = 0; i < n; ++i) amb[i] = sr * v[i];
            amb[n] = cr;
            out.push_back(rot.apply(UnitVector(amb)));
        }
    }
    return out;
}

std::vector<UnitVector> sphere_samples(int sphere_dim, int m) {
    std::vector<UnitVector> out;
    out.reserve(m);
    if (sphere_dim == 2) {
        // Fibonacci spiral on S^2.
        const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
        for (int k = 0; k < m; ++k) {
            const double z = 1.0 - 2.0 * (k + 0.5) / m;
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double t = 2.0 * kPi * k / golden;
            out.push_back(UnitVector(Vec{r * std::cos(t), r * std::sin(t), z}));
        }
    } else {
        std::mt19937_64 rng(0xf1b00000ULL + static_cast<std::uint64_t>(m));
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int k = 0; k < m; ++k) {
            Vec v(sphere_dim + 1, 0.0);
            do {
                for (double& x : v) x = gauss(rng);
            } while (norm(v) < 1e-9);
            out.push_back(UnitVector(normalized(v)));
        }
    }
    return out;
}

}  // namespace sphereoid
