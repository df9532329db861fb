// analytic.hpp: zero-temperature closed forms for the pure-dephasing qubit.
//
// For exponent s and x = B t:
//   s == 1:  gamma = (A/2) ln(1 + x^2),            I = A atan(x)
//   s != 1:  gamma = A Gamma(s-1) [1 - (1+x^2)^((1-s)/2) cos((s-1) atan x)]
//            I     = A Gamma(s-1) (1+x^2)^((1-s)/2) sin((s-1) atan x)
// P_x = exp(-gamma) cos(eps t), phi = cos(I), C_x = P_x phi at eps = 0.
//
// Inside |s - 1| < kOhmicLimitBand, Gamma(s-1) ~ 1/(s-1) meets a bracket of
// order (s-1); a first-order expansion about the Ohmic forms is used there.

#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "dephasing/spectral.hpp"

namespace dephasing::analytic {

inline constexpr double kOhmicLimitBand = 1e-6;

struct CorrelatorPoint {
    double t = 0.0;
    double gamma = 0.0;
    double phase_integral = 0.0;
    double phi = 1.0;
    double p_x = 1.0;
    double c_x = 1.0;
};

enum class Spacing { Linear, Log };

/// Strictly increasing, non-negative sample times. Log spacing requires t > 0.
class TimeGrid {
public:
    TimeGrid(std::vector<double> times, Spacing spacing);

    static TimeGrid linear(double t_min, double t_max, std::size_t points);
    /// Points equally spaced in log10(t); the endpoints are hit exactly.
    static TimeGrid log(double t_min, double t_max, std::size_t points);

    std::span<const double> times() const noexcept { return times_; }
    Spacing spacing() const noexcept { return spacing_; }
    std::size_t size() const noexcept { return times_.size(); }
    double operator[](std::size_t i) const { return times_[i]; }

private:
    std::vector<double> times_;
    Spacing spacing_;
};

enum class Source { ClosedForm, QuadratureOracle, DiscreteBathOracle };

std::string_view to_string(Source source) noexcept;

struct CorrelatorSeries {
    ModelSpec model;
    TimeGrid grid;
    std::vector<CorrelatorPoint> points;  // aligned 1:1 with grid
    Source source = Source::ClosedForm;
};

/// Decoherence factor at T = 0. Requires a Hermitian bath and t >= 0.
double gamma_closed(const BathSpec& bath, double t);

/// I(t) = integral of J(w) sin(w t) / (pi w^2) over w > 0, closed form.
double phase_integral_closed(const BathSpec& bath, double t);

/// cos(I(t)); the Ohmic branch is evaluated through atan(1/x) at large x so
/// the zero of cos at odd coupling is resolved to full relative precision.
double phi_fn(const BathSpec& bath, double t);

/// exp(-gamma) cos(eps t) for the |+x> uncorrelated initial state. T must be 0.
double p_x(const ModelSpec& model, double t);

/// Equilibrium anticommutator correlator. With sgn(0) := 0,
/// C_x = exp(-gamma) [cos(eps t) cos I + sgn(eps) sin(eps t) sin I].
double c_x(const ModelSpec& model, double t);

CorrelatorPoint evaluate_point(const ModelSpec& model, double t);

/// Closed-form series over a grid, evaluated in parallel.
CorrelatorSeries evaluate_series(const ModelSpec& model, const TimeGrid& grid);

}  // namespace dephasing::analytic
