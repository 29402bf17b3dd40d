#pragma once

// Seeded sampling, random-body generation, and the experiment drivers that
// check the convergence theorem and the isoperimetric inequalities at desk
// scale, with CSV/JSON report emission.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "sphereoid/bodies.hpp"
#include "sphereoid/measure.hpp"
#include "sphereoid/spherical_body.hpp"

namespace sphereoid {

struct ExperimentConfig {
    std::string experiment;  // convergence | polar_bp | euclid_polar_bp |
                             // randomized_ineq | open_problem | property_suite
    int n = 2;               // sphere dimension (chart dimension)
    std::uint64_t seed = 0;
    int trials = 0;          // 0 = driver default
    std::vector<int> sample_sizes;        // convergence
    int grid_resolution = 720;
    double cap_radius = 0.7853981633974483;  // pi/4
    int complexity = 8;
    double eccentricity = 0.8;               // max eccentricity of random bodies
    double base_scale = 0.8;                 // chart scale of random bodies
    int points_per_trial = 5;                // randomized_ineq N
    int mc_reps = 10000;
    std::string mu = "psi";
    std::string nu = "xi";
    double eps_rel = 1e-3;      // relative slack for inequality checks
    double eps_eq = 1e-6;       // absolute tolerance for equality cases
    double final_tol = 0.05;    // convergence: largest-N median bound (radians)
    double property_tol = 1e-6; // property_suite tolerance
    bool with_tilde = true;     // convergence: also track the conv-of-centroid-cloud variant

    static ExperimentConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

struct ExperimentReport {
    nlohmann::json config_echo;
    std::vector<std::string> columns;            // trials.csv header
    std::vector<std::vector<double>> rows;       // one record per trial
    std::vector<std::string> curve_columns;      // curve.csv (convergence)
    std::vector<std::vector<double>> curve;
    std::vector<std::pair<std::string, double>> summary;
    std::vector<std::string> notes;
    nlohmann::json extra;                        // e.g. candidate body snapshots
    bool passed = true;
    bool violation = false;
    double wall_seconds = 0.0;

    int exit_code() const { return violation ? 2 : 0; }
    std::string trials_csv() const;
    std::string curve_csv() const;
    nlohmann::json to_json() const;
    /// Writes report.json, trials.csv and (when present) curve.csv into dir.
    void write(const std::string& dir) const;
};

/// RNG stream for one trial, derived from (seed, trial index).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// Max worker threads: SPHEREOID_THREADS if set, else hardware concurrency.
int thread_budget();

/// Runs fn(0..count-1) on up to thread_budget() workers; exceptions rethrown.
void parallel_for(int count, const std::function<void(int)>& fn);

/// N i.i.d. points with law sigma restricted to K, by rejection from the
/// circumscribed cap. Throws RejectionStall on pathological acceptance.
std::vector<UnitVector> sample_uniform_in_body(const SphericalBody& k, int count,
                                               std::mt19937_64& rng);

/// Symmetrized random hull in the chart at the pole; eccentricity 0 gives a
/// regular 2*complexity-gon of circumradius `scale`.
EuclidBody random_symmetric_polygon(std::mt19937_64& rng, int complexity,
                                    double eccentricity, double scale = 0.8);

SphericalBody random_symmetric_body(std::mt19937_64& rng, int complexity,
                                    double eccentricity, double scale = 0.8);

/// Uniform sample from a polygon with the origin interior (fan triangulation).
Vec sample_point_in_polygon(const EuclidBody& body, std::mt19937_64& rng);

/// Sample from the normalized density d restricted to the polygon.
Vec sample_density_in_polygon(const EuclidBody& body, const WeightedDensity& d,
                              std::mt19937_64& rng);

/// d-mass of a regular m-gon of given circumradius (single-wedge quadrature).
double regular_polygon_mass(int m, double circumradius, const WeightedDensity& d);

/// Circumradius of the regular m-gon whose d-mass equals target.
double matched_regular_radius(int m, double target, const WeightedDensity& d);

/// Support values of a CCW polygon on all grid directions (rotating argmax).
std::vector<double> polygon_supports(const EuclidBody& body, const DirectionGrid& grid);

ExperimentReport run_convergence(const ExperimentConfig& c);
ExperimentReport run_polar_bp(const ExperimentConfig& c);
ExperimentReport run_euclid_polar_bp(const ExperimentConfig& c);
ExperimentReport run_randomized_ineq(const ExperimentConfig& c);
ExperimentReport run_open_problem(const ExperimentConfig& c);
ExperimentReport run_property_suite(const ExperimentConfig& c);

/// Dispatch on c.experiment.
ExperimentReport run_experiment(const ExperimentConfig& c);

}  // namespace sphereoid
