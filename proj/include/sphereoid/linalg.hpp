#pragma once

// Small dense vector helpers used throughout. Dimensions are tiny
// (ambient n+1 with n in {2,3,...}), so plain std::vector<double> is enough.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace sphereoid {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline Vec scale(const Vec& a, double t) {
    Vec r(a);
    for (double& x : r) x *= t;
    return r;
}

inline void add_in_place(Vec& a, const Vec& b, double t = 1.0) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += t * b[i];
}

inline Vec normalized(const Vec& a, double eps = 0.0) {
    const double n = norm(a);
    if (n <= eps) throw std::invalid_argument("normalized: vector too small");
    return scale(a, 1.0 / n);
}

inline Vec zero_vec(std::size_t d) { return Vec(d, 0.0); }

inline double dist(const Vec& a, const Vec& b) { return norm(sub(a, b)); }

// 2D cross product (z-component).
inline double cross2(const Vec& a, const Vec& b) {
    return a[0] * b[1] - a[1] * b[0];
}

inline Vec perp2(const Vec& a) { return Vec{-a[1], a[0]}; }

}  // namespace sphereoid
