// Command-line front end: experiment runner and body generator.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sphereoid/experiment.hpp"
#include "sphereoid/serialize.hpp"

namespace {

int run_command(const std::string& experiment, const std::string& config_path,
                std::uint64_t seed, bool seed_given, const std::string& out_dir) {
    sphereoid::ExperimentConfig config;
    if (!config_path.empty()) {
        std::ifstream f(config_path);
        if (!f) {
            std::cerr << "cannot open config: " << config_path << "\n";
            return 3;
        }
        nlohmann::json j;
        f >> j;
        config = sphereoid::ExperimentConfig::from_json(j);
    }
    if (!experiment.empty()) config.experiment = experiment;
    if (seed_given) config.seed = seed;
    if (config.experiment.empty()) {
        std::cerr << "no experiment selected (use --experiment or the config file)\n";
        return 3;
    }
    const sphereoid::ExperimentReport report = sphereoid::run_experiment(config);
    if (!out_dir.empty()) report.write(out_dir);
    std::cout << config.experiment << ": " << (report.passed ? "pass" : "FAIL")
              << (report.violation ? " (violation found)" : "") << "\n";
    for (const auto& [key, value] : report.summary)
        std::cout << "  " << key << " = " << value << "\n";
    for (const std::string& note : report.notes) std::cout << "  note: " << note << "\n";
    return report.exit_code();
}

int body_command(const std::string& make, double radius, int complexity, double eccentricity,
                 double scale, std::uint64_t seed, int resolution, const std::string& out_file) {
    nlohmann::json j;
    if (make == "cap") {
        j = sphereoid::to_json(
            sphereoid::cap_body(sphereoid::UnitVector::pole(2), radius, resolution));
    } else if (make == "random") {
        std::mt19937_64 rng(seed);
        j = sphereoid::to_json(
            sphereoid::random_symmetric_body(rng, complexity, eccentricity, scale));
    } else {
        std::cerr << "unknown body kind: " << make << " (expected cap|random)\n";
        return 3;
    }
    if (out_file.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(out_file);
        f << j.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sphereoid - spherical centroid body experiments"};
    app.require_subcommand(1);

    std::string experiment, config_path, out_dir;
    std::uint64_t seed = 0;
    CLI::App* run = app.add_subcommand("run", "run an experiment");
    run->add_option("--experiment", experiment,
                    "convergence|polar_bp|euclid_polar_bp|randomized_ineq|open_problem|"
                    "property_suite");
    run->add_option("--config", config_path, "JSON config file");
    CLI::Option* seed_opt = run->add_option("--seed", seed, "RNG seed (overrides config)");
    run->add_option("--out", out_dir, "output directory for report.json/trials.csv/curve.csv");

    std::string make, body_out;
    double radius = 0.7853981633974483, eccentricity = 0.8, scale = 0.8;
    int complexity = 8, resolution = 720;
    std::uint64_t body_seed = 0;
    CLI::App* body = app.add_subcommand("body", "emit a body as JSON");
    body->add_option("--make", make, "cap|random")->required();
    body->add_option("--radius", radius, "cap radius in radians");
    body->add_option("--complexity", complexity, "random body complexity");
    body->add_option("--eccentricity", eccentricity, "random body eccentricity in [0,1)");
    body->add_option("--scale", scale, "random body chart scale");
    body->add_option("--resolution", resolution, "cap polygon resolution");
    body->add_option("--seed", body_seed, "RNG seed");
    body->add_option("--out", body_out, "output file (stdout if omitted)");

    CLI11_PARSE(app, argc, argv);
    try {
        if (run->parsed())
            return run_command(experiment, config_path, seed, seed_opt->count() > 0, out_dir);
        return body_command(make, radius, complexity, eccentricity, scale, body_seed,
                            resolution, body_out);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    }
}
