#include "sphereoid/polar_table.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sphereoid {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kMaxPanel = 0.15;  // radians
}

PolarTable::PolarTable(const EuclidBody& body, const WeightedDensity& density)
    : rays_(body), density_(density) {
    bounds_.push_back(rays_.edge_start(0));
    for (int e = 0; e < rays_.edge_count(); ++e) {
        const double a = rays_.edge_start(e);
        const double span = rays_.edge_span(e);
        const int panels = std::max(1, static_cast<int>(std::ceil(span / kMaxPanel)));
        for (int k = 1; k <= panels; ++k) bounds_.push_back(a + span * k / panels);
    }
    for (int w = 0; w < 3; ++w) {
        prefix_[w].resize(bounds_.size());
        prefix_[w][0] = 0.0;
    }
    for (std::size_t i = 0; i + 1 < bounds_.size(); ++i)
        for (int w = 0; w < 3; ++w)
            prefix_[w][i + 1] = prefix_[w][i] + fragment(w, bounds_[i], bounds_[i + 1]);
    total_mass_ = prefix_[0].back();
    total_moment_ = Vec{prefix_[1].back(), prefix_[2].back()};
}

double PolarTable::fragment(int which, double a, double b) const {
    const int p = (which == 0) ? density_.dim - 1 : density_.dim;
    auto f = [&](double t) {
        const double g = radial_primitive(density_, p, rays_.rho(t));
        switch (which) {
            case 0: return g;
            case 1: return g * std::cos(t);
            default: return g * std::sin(t);
        }
    };
    // Adaptive: rho can steepen near edge ends for eccentric polygons.
    return adaptive_gauss_legendre(f, a, b, 1e-13);
}

double PolarTable::segment(int which, double a, double b) const {
    if (b <= a) return 0.0;
    const auto lo = std::upper_bound(bounds_.begin(), bounds_.end(), a);
    const auto hi = std::upper_bound(bounds_.begin(), bounds_.end(), b);
    const std::size_t ia = static_cast<std::size_t>(lo - bounds_.begin());   // first bound > a
    const std::size_t ib = static_cast<std::size_t>(hi - bounds_.begin());   // first bound > b
    if (ia >= ib)  // a and b inside the same panel
        return fragment(which, a, b);
    double s = fragment(which, a, bounds_[ia]);
    s += prefix_[which][ib - 1] - prefix_[which][ia];
    s += fragment(which, bounds_[ib - 1], b);
    return s;
}

namespace {
// Shift a into [base, base + 2 pi).
double wrap_from(double a, double base) {
    double t = std::fmod(a - base, 2.0 * kPi);
    if (t < 0.0) t += 2.0 * kPi;
    return base + t;
}
}

double PolarTable::mass_between(double a, double b) const {
    const double len = b - a;
    const double base = bounds_.front();
    const double top = base + 2.0 * kPi;
    double a0 = wrap_from(a, base);
    double b0 = a0 + len;
    if (b0 <= top + 1e-15) return segment(0, a0, std::min(b0, top));
    return segment(0, a0, top) + segment(0, base, b0 - 2.0 * kPi);
}

Vec PolarTable::moment_between(double a, double b) const {
    const double len = b - a;
    const double base = bounds_.front();
    const double top = base + 2.0 * kPi;
    double a0 = wrap_from(a, base);
    double b0 = a0 + len;
    Vec m{0.0, 0.0};
    if (b0 <= top + 1e-15) {
        m[0] = segment(1, a0, std::min(b0, top));
        m[1] = segment(2, a0, std::min(b0, top));
    } else {
        m[0] = segment(1, a0, top) + segment(1, base, b0 - 2.0 * kPi);
        m[1] = segment(2, a0, top) + segment(2, base, b0 - 2.0 * kPi);
    }
    return m;
}

double PolarTable::weighted_support(double alpha) const {
    // int |cos(t-alpha)| g2 = int_{+arc} cos(t-alpha) g2 - int_{-arc} cos(t-alpha) g2
    // and the two arcs partition the circle, so the second integral is
    // (total projected moment) minus the first.
    const Vec mplus = moment_between(alpha - kPi / 2.0, alpha + kPi / 2.0);
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    const double iplus = ca * mplus[0] + sa * mplus[1];
    const double itot = ca * total_moment_[0] + sa * total_moment_[1];
    return 2.0 * iplus - itot;
}

}  // namespace sphereoid
