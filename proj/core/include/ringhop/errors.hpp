#pragma once

#include <stdexcept>
#include <string>

namespace ringhop {

/// Invalid user-supplied value. Carries the name of the offending field.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string field, const std::string& reason)
        : std::runtime_error(field + ": " + reason), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Request exceeds a hard implementation limit (e.g. action-space size).
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No transmission configuration closes the link budget at this distance.
/// shortfall_db is the smallest margin deficit over all (power, rate) pairs.
class InfeasibleLinkError : public std::runtime_error {
public:
    InfeasibleLinkError(double distance_m, double shortfall_db);

    double distance_m() const noexcept { return distance_m_; }
    double shortfall_db() const noexcept { return shortfall_db_; }

private:
    double distance_m_;
    double shortfall_db_;
};

/// A routing action requires a link no configuration can close; identifies
/// the transmitting ring.
class InfeasibleActionError : public std::runtime_error {
public:
    InfeasibleActionError(int ring, const InfeasibleLinkError& cause);

    int ring() const noexcept { return ring_; }
    double distance_m() const noexcept { return distance_m_; }
    double shortfall_db() const noexcept { return shortfall_db_; }

private:
    int ring_;
    double distance_m_;
    double shortfall_db_;
};

/// The scenario is unusable as configured (e.g. no feasible action at all).
class ConfigurationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ringhop
