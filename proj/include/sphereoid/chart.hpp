#pragma once

// Gnomonic projection g_e, its inverse, and the radial densities that
// transport spherical measures to the tangent chart.

#include <functional>
#include <string>
#include <vector>

#include "sphereoid/linalg.hpp"
#include "sphereoid/sphere.hpp"

namespace sphereoid {

inline constexpr double kHemisphereMargin = 1e-9;

using ChartPoint = Vec;  // n coordinates in a frame basis

/// Orthonormal frame of the tangent hyperplane R^n_e at a point e.
class TangentFrame {
public:
    TangentFrame(UnitVector center, std::vector<Vec> basis);

    /// Deterministic frame: Gram-Schmidt of canonical axes against the
    /// center, smallest-index nonparallel axis first.
    static TangentFrame at(const UnitVector& e);

    const UnitVector& center() const { return center_; }
    const std::vector<Vec>& basis() const { return basis_; }
    int chart_dim() const { return static_cast<int>(basis_.size()); }

    ChartPoint to_chart(const Vec& ambient) const;
    Vec to_ambient(const ChartPoint& x) const;

private:
    UnitVector center_;
    std::vector<Vec> basis_;
};

enum class DensityKind { xi, phi, psi, lebesgue };

std::string to_string(DensityKind k);
DensityKind density_kind_from_string(const std::string& s);

/// One of the radial chart densities xi, phi, psi, or Lebesgue, bound to a
/// chart dimension n. All three nontrivial kinds are radially symmetric and
/// radially decreasing.
struct WeightedDensity {
    DensityKind kind;
    int dim;

    double radial(double r) const;     // value of the density at |x| = r
    double operator()(const ChartPoint& x) const;
};

ChartPoint project(const TangentFrame& f, const UnitVector& v,
                   double margin = kHemisphereMargin);

UnitVector unproject(const TangentFrame& f, const ChartPoint& x);

double density_eval(const WeightedDensity& d, const ChartPoint& x);

/// Integral of r^p * density(r) over [0, rho]. Closed forms for n = 2
/// (p in {1, 2}), adaptive Gauss-Legendre otherwise. For p = dim it is the
/// radial part of first-moment integrals; for p = dim - 1 of mass integrals.
double radial_primitive(const WeightedDensity& d, int power, double rho);

/// Adaptive Gauss-Legendre quadrature on [a, b] with relative tolerance.
double adaptive_gauss_legendre(const std::function<double(double)>& f, double a,
                               double b, double rel_tol = 1e-10);

/// Fixed-order composite Gauss-Legendre on [a, b] (16 nodes per panel, panel
/// length capped). Exposed for the polygon quadrature tables.
double gauss_legendre_16(const std::function<double(double)>& f, double a, double b);

}  // namespace sphereoid
