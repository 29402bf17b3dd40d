#pragma once

// Points, caps, rotations and distances on S^n embedded in R^{n+1}.

#include <cstdint>
#include <random>
#include <vector>

#include "sphereoid/linalg.hpp"

namespace sphereoid {

inline constexpr double kUnitNormTol = 1e-12;

/// A point of S^n, stored as its (n+1)-coordinate ambient embedding.
class UnitVector {
public:
    explicit UnitVector(Vec coords);

    const Vec& coords() const { return coords_; }
    double operator[](std::size_t i) const { return coords_[i]; }

    int ambient_dim() const { return static_cast<int>(coords_.size()); }
    int sphere_dim() const { return ambient_dim() - 1; }

    UnitVector negated() const;

    /// Canonical pole (0,...,0,1) of S^n.
    static UnitVector pole(int sphere_dim);

private:
    Vec coords_;
};

struct SphericalCap {
    UnitVector center;
    double radius;  // radians, in (0, pi/2]

    SphericalCap(UnitVector c, double r);
    bool proper() const { return radius < 1.5707963267948966; }
};

/// Element of O(n+1), validated orthogonal at construction.
class Rotation {
public:
    explicit Rotation(std::vector<Vec> rows);

    Vec apply(const Vec& v) const;
    UnitVector apply(const UnitVector& u) const;

    const std::vector<Vec>& rows() const { return rows_; }

    static Rotation identity(int ambient_dim);
    /// Haar-ish random orthogonal matrix (Gram-Schmidt of Gaussians).
    static Rotation random(int ambient_dim, std::mt19937_64& rng);
    /// Rotation mapping unit vector a to unit vector b (identity off span{a,b}).
    static Rotation align(const UnitVector& a, const UnitVector& b);

private:
    std::vector<Vec> rows_;
};

double spherical_distance(const UnitVector& u, const UnitVector& v);

/// Geodesic reflection of v about e: v^e = -v + 2(v.e)e.
UnitVector reflect(const UnitVector& v, const UnitVector& e);

/// Point on the geodesic segment [a, b] at parameter t in [0,1] (slerp).
UnitVector geodesic_point(const UnitVector& a, const UnitVector& b, double t);

/// Symmetric Hausdorff distance between two finite boundary samples.
double spherical_hausdorff(const std::vector<UnitVector>& a,
                           const std::vector<UnitVector>& b);

/// m quasi-uniform samples at spherical distance exactly `radius` from center.
std::vector<UnitVector> cap_boundary_samples(const SphericalCap& cap, int m);

/// Quasi-uniform samples of the whole sphere S^n (deterministic spiral for
/// n = 2, seeded normalized Gaussians for n >= 3).
std::vector<UnitVector> sphere_samples(int sphere_dim, int m);

}  // namespace sphereoid
