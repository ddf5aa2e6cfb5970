#pragma once

#include <stdexcept>
#include <string>

namespace nlbl {

/// Quadrature failed to reach the requested tolerance; carries the achieved error.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved_error)
        : std::runtime_error(what), achieved_error_(achieved_error) {}

    double achieved_error() const { return achieved_error_; }

private:
    double achieved_error_;
};

/// Iterative solver did not converge; carries the last measured change/residual.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, int iterations, double last_residual)
        : std::runtime_error(what), iterations_(iterations), last_residual_(last_residual) {}

    int iterations() const { return iterations_; }
    double last_residual() const { return last_residual_; }

private:
    int iterations_;
    double last_residual_;
};

/// Configuration file or override is malformed (unknown key, bad type, bad value).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace nlbl
