// numerics.hpp: special functions and semi-infinite quadrature.

#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <span>

namespace dephasing::numerics {

/// Inputs closer than this to a non-positive integer are rejected by gamma_fn.
inline constexpr double kPoleExclusion = 1e-6;

/// sin(pi x) and cos(pi x) with exact argument reduction; exact zeros at
/// integers (sin) and half-integers (cos).
double sin_pi(double x) noexcept;
double cos_pi(double x) noexcept;

/// Gamma function on the real line. Lanczos (g = 7, 9 terms) for x >= 0.5,
/// reflection below. Throws SingularityError within kPoleExclusion of a pole.
double gamma_fn(double x);

/// ln(1 + x^2) without cancellation for tiny |x| or overflow for huge |x|.
double stable_log1p_sq(double x) noexcept;

/// sin(x)/x, continuous through 0.
double sinc(double x) noexcept;

/// x / tanh(x), continuous through 0 (value 1).
double x_over_tanh(double x) noexcept;

/// Fixed-tree pairwise summation; the result depends only on the input order.
double pairwise_sum(std::span<const double> values) noexcept;

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    std::size_t max_subdivisions = 2000;

    /// DomainError unless both tolerances are > 0 and max_subdivisions >= 1.
    void validate() const;
};

/// Shape information about the integrand.
///
/// `scale` is the decay length of the exponential tail (the bath cutoff).
/// Everything beyond split_factor * scale is mapped onto a finite interval.
/// `max_panel_width` bounds the initial panels; oscillatory integrands pass
/// half a period here.
struct IntegrandShape {
    double scale = 1.0;
    double split_factor = 50.0;
    double max_panel_width = std::numeric_limits<double>::infinity();
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t evaluations = 0;
    std::size_t subdivisions = 0;
};

/// Integral of f over [0, inf).
///
/// The first panel [0, a] uses tanh-sinh nodes so integrable power-law
/// singularities at the origin cost nothing extra. Interior panels use 15-point
/// Gauss-Kronrod with |K15 - G7| as the error estimate. The tail is integrated
/// in u where w = split + scale * u / (1 - u). Panels are bisected worst-first
/// until the summed estimate drops below max(abs_tol, rel_tol * |value|).
/// Throws ConvergenceError (carrying the best estimate) after
/// max_subdivisions bisections.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         const QuadratureConfig& cfg = {},
                                         const IntegrandShape& shape = {});

}  // namespace dephasing::numerics
