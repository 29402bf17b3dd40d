#pragma once

#include <stdexcept>
#include <string>

namespace sphereoid {

struct HemisphereViolation : std::runtime_error {
    explicit HemisphereViolation(const std::string& m) : std::runtime_error(m) {}
};

struct DegenerateHull : std::runtime_error {
    explicit DegenerateHull(const std::string& m) : std::runtime_error(m) {}
};

struct OriginNotInterior : std::runtime_error {
    explicit OriginNotInterior(const std::string& m) : std::runtime_error(m) {}
};

struct CentroidUndefined : std::runtime_error {
    explicit CentroidUndefined(const std::string& m) : std::runtime_error(m) {}
};

struct MeasureTooSmall : std::runtime_error {
    explicit MeasureTooSmall(const std::string& m) : std::runtime_error(m) {}
};

struct TargetOutOfRange : std::runtime_error {
    explicit TargetOutOfRange(const std::string& m) : std::runtime_error(m) {}
};

struct ProductTooLarge : std::runtime_error {
    explicit ProductTooLarge(const std::string& m) : std::runtime_error(m) {}
};

struct RejectionStall : std::runtime_error {
    explicit RejectionStall(const std::string& m) : std::runtime_error(m) {}
};

struct InfeasibleSupports : std::runtime_error {
    explicit InfeasibleSupports(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace sphereoid
