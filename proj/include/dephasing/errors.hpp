#pragma once

#include <stdexcept>
#include <string>

namespace dephasing {

// Argument outside the physical or mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Gamma function evaluated at, or too close to, one of its poles.
class SingularityError : public std::domain_error {
public:
    SingularityError(const std::string& what, double nearest_pole)
        : std::domain_error(what), nearest_pole_(nearest_pole) {}
    double nearest_pole() const noexcept { return nearest_pole_; }

private:
    double nearest_pole_;
};

// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best_estimate, double error_bound)
        : std::runtime_error(what), best_estimate_(best_estimate), error_bound_(error_bound) {}
    double best_estimate() const noexcept { return best_estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double best_estimate_;
    double error_bound_;
};

// Integral that has no finite value for the requested parameters.
class DivergenceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Log-log regression on data that cannot be log-transformed.
class FitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dephasing
