#include "sphereoid/chart.hpp"

#include <cmath>
#include <stdexcept>

#include "sphereoid/errors.hpp"

namespace sphereoid {

TangentFrame::TangentFrame(UnitVector center, std::vector<Vec> basis)
    : center_(std::move(center)), basis_(std::move(basis)) {
    const int d = center_.ambient_dim();
    if (static_cast<int>(basis_.size()) != d - 1)
        throw std::invalid_argument("TangentFrame: basis must have n vectors");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (static_cast<int>(basis_[i].size()) != d)
            throw std::invalid_argument("TangentFrame: basis vector dimension mismatch");
        if (std::abs(dot(basis_[i], center_.coords())) > 1e-12)
            throw std::invalid_argument("TangentFrame: basis vector not orthogonal to center");
        for (std::size_t j = 0; j <= i; ++j) {
            const double target = (i == j) ? 1.0 : 0.0;
            if (std::abs(dot(basis_[i], basis_[j]) - target) > 1e-12)
                throw std::invalid_argument("TangentFrame: basis not orthonormal");
        }
    }
}

TangentFrame TangentFrame::at(const UnitVector& e) {
    const int d = e.ambient_dim();
    std::vector<Vec> basis;
    basis.reserve(d - 1);
    for (int axis = 0; axis < d && static_cast<int>(basis.size()) < d - 1; ++axis) {
        Vec v(d, 0.0);
        v[axis] = 1.0;
        add_in_place(v, e.coords(), -dot(v, e.coords()));
        for (const Vec& b : basis) add_in_place(v, b, -dot(v, b));
        const double n = norm(v);
        if (n < 1e-6) continue;  // axis (nearly) parallel to span so far
        basis.push_back(scale(v, 1.0 / n));
    }
    return TangentFrame(e, std::move(basis));
}

ChartPoint TangentFrame::to_chart(const Vec& ambient) const {
    ChartPoint x(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) x[i] = dot(basis_[i], ambient);
    return x;
}

Vec TangentFrame::to_ambient(const ChartPoint& x) const {
    Vec v(center_.ambient_dim(), 0.0);
    for (std::size_t i = 0; i < basis_.size(); ++i) add_in_place(v, basis_[i], x[i]);
    return v;
}

std::string to_string(DensityKind k) {
    switch (k) {
        case DensityKind::xi: return "xi";
        case DensityKind::phi: return "phi";
        case DensityKind::psi: return "psi";
        case DensityKind::lebesgue: return "lebesgue";
    }
    return "?";
}

DensityKind density_kind_from_string(const std::string& s) {
    if (s == "xi") return DensityKind::xi;
    if (s == "phi") return DensityKind::phi;
    if (s == "psi") return DensityKind::psi;
    if (s == "lebesgue") return DensityKind::lebesgue;
    throw std::invalid_argument("unknown density kind: " + s);
}

double WeightedDensity::radial(double r) const {
    const double q = 1.0 + r * r;
    switch (kind) {
        case DensityKind::xi: return std::pow(q, -0.5 * (dim + 1));
        case DensityKind::phi: return 1.0 / std::sqrt(q);
        case DensityKind::psi: return std::pow(q, -0.5 * (dim + 2));
        case DensityKind::lebesgue: return 1.0;
    }
    return 0.0;
}

double WeightedDensity::operator()(const ChartPoint& x) const { return radial(norm(x)); }

ChartPoint project(const TangentFrame& f, const UnitVector& v, double margin) {
    const double c = dot(v.coords(), f.center().coords());
    if (c <= margin)
        throw HemisphereViolation("project: point not strictly inside the open hemisphere");
    Vec amb = scale(v.coords(), 1.0 / c);
    add_in_place(amb, f.center().coords(), -1.0);
    return f.to_chart(amb);
}

UnitVector unproject(const TangentFrame& f, const ChartPoint& x) {
    for (double c : x)
        if (!std::isfinite(c)) throw std::invalid_argument("unproject: non-finite chart point");
    Vec amb = f.to_ambient(x);
    add_in_place(amb, f.center().coords(), 1.0);
    return UnitVector(normalized(amb));
}

double density_eval(const WeightedDensity& d, const ChartPoint& x) { return d(x); }

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kGL16Nodes[8] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
constexpr double kGL16Weights[8] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

double gl16_panel(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = half * kGL16Nodes[i];
        s += kGL16Weights[i] * (f(mid - dx) + f(mid + dx));
    }
    return half * s;
}

double adaptive_rec(const std::function<double(double)>& f, double a, double b,
                    double whole, double tol, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = gl16_panel(f, a, mid);
    const double right = gl16_panel(f, mid, b);
    const double delta = left + right - whole;
    if (depth > 40 || std::abs(delta) <= tol * std::max(1.0, std::abs(left + right)))
        return left + right;
    return adaptive_rec(f, a, mid, left, tol, depth + 1) +
           adaptive_rec(f, mid, b, right, tol, depth + 1);
}

}  // namespace

double gauss_legendre_16(const std::function<double(double)>& f, double a, double b) {
    if (b <= a) return 0.0;
    const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / 0.15)));
    double s = 0.0;
    for (int k = 0; k < panels; ++k) {
        const double x0 = a + (b - a) * k / panels;
        const double x1 = a + (b - a) * (k + 1) / panels;
        s += gl16_panel(f, x0, x1);
    }
    return s;
}

double adaptive_gauss_legendre(const std::function<double(double)>& f, double a,
                               double b, double rel_tol) {
    if (b <= a) return 0.0;
    return adaptive_rec(f, a, b, gl16_panel(f, a, b), rel_tol, 0);
}

double radial_primitive(const WeightedDensity& d, int power, double rho) {
    if (power != d.dim - 1 && power != d.dim)
        throw std::invalid_argument("radial_primitive: power must be n-1 or n");
    if (rho < 0.0) throw std::invalid_argument("radial_primitive: rho must be >= 0");
    if (rho == 0.0) return 0.0;
    if (d.kind == DensityKind::lebesgue)
        return std::pow(rho, power + 1) / (power + 1);
    if (d.dim == 2) {
        const double q = 1.0 + rho * rho;
        switch (d.kind) {
            case DensityKind::xi:  // (1+r^2)^{-3/2}
                if (power == 1) return 1.0 - 1.0 / std::sqrt(q);
                return std::asinh(rho) - rho / std::sqrt(q);
            case DensityKind::psi:  // (1+r^2)^{-2}
                if (power == 1) return rho * rho / (2.0 * q);
                return 0.5 * (std::atan(rho) - rho / q);
            case DensityKind::phi:  // (1+r^2)^{-1/2}
                if (power == 1) return std::sqrt(q) - 1.0;
                return 0.5 * (rho * std::sqrt(q) - std::asinh(rho));
            default: break;
        }
    }
    return adaptive_gauss_legendre(
        [&](double r) { return std::pow(r, power) * d.radial(r); }, 0.0, rho, 1e-10);
}

}  // namespace sphereoid
