// asymptotics.hpp: short/long-time laws, integer special cases, crossover
// scales and the log-log fitting used to check them against closed forms.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dephasing/analytic.hpp"
#include "dephasing/spectral.hpp"

namespace dephasing::asymptotics {

/// A value counts as an exact integer only this close to it.
inline constexpr double kIntegerTolerance = 1e-12;

enum class Parity { Even, Odd };

struct IntegerProximity {
    double value;
    std::int64_t nearest_integer;
    double distance;  // in [0, 0.5]
    Parity parity;    // of nearest_integer

    bool is_integer() const noexcept { return distance <= kIntegerTolerance; }
    bool is_odd_integer() const noexcept { return is_integer() && parity == Parity::Odd; }
    bool is_even_integer() const noexcept { return is_integer() && parity == Parity::Even; }
};

IntegerProximity integer_proximity(double value);

/// P_x ~ 1 - p_x (Bt)^2 and C_x ~ 1 - c_x (Bt)^2 for Bt << 1.
struct ShortTimeCoefficients {
    double p_x;
    double c_x;
};

ShortTimeCoefficients short_time_coeffs(const ModelSpec& model);

enum class Regime {
    OhmicGeneric,
    OhmicOddA,
    SuperOhmicGeneric,
    SuperOhmicEvenS,
    SuperOhmicOddS,
    SubOhmic,
};

std::string_view to_string(Regime regime) noexcept;

/// How the reported numbers combine into the long-time law, with x = Bt:
///   PowerLaw:              y ~ amplitude * x^exponent
///   PlateauApproach:       y ~ plateau * exp(-amplitude * x^exponent)
///   StretchedExponential:  y ~ prefactor * exp(-amplitude * x^exponent), plateau 0
enum class DecayForm { PowerLaw, PlateauApproach, StretchedExponential };

/// Argument of the extra cosine factor in C_x: coefficient * x^(1-s) or x^(-s).
enum class FrequencyLaw { None, OneMinusS, MinusS };

struct OscillationLaw {
    FrequencyLaw law = FrequencyLaw::None;
    double coefficient = 0.0;
};

struct RegimeReport {
    Regime regime;
    DecayForm form;
    double plateau = 0.0;    // exp(-A Gamma(s-1)) for s > 1, else 0
    double prefactor = 1.0;  // multiplies the exponential in the non-power-law forms
    double exponent = 0.0;
    double amplitude = 0.0;  // power-law prefactor or (signed) decay rate
    bool rate_negative = false;
    OscillationLaw oscillation;
    std::optional<double> crossover;  // Bt_cr of the nearest special branch, when finite and > 0
};

/// Long-time law of P_x at T = 0, eps = 0.
RegimeReport long_time_p(const ModelSpec& model);

/// Long-time law of C_x at T = 0, eps = 0.
RegimeReport long_time_c(const ModelSpec& model);

enum class CrossoverFamily { OhmicOddA, EvenS_P, OddS_phi, EvenS_C, OddS_C };

/// Bt_cr separating the integer-dominated and generic regimes:
///   OhmicOddA:           A |tan(pi A / 2)|
///   EvenS_P, EvenS_C:    |cot(pi s / 2)| / (s - 1)
///   OddS_phi, OddS_C:    (s - 1) |tan(pi s / 2)|
/// +infinity exactly at the governing integer. The s families need s > 1.
double crossover_time(const ModelSpec& model, CrossoverFamily family);

enum class Column { Gamma, PhaseIntegral, Phi, Px, Cx };

struct PowerLawFit {
    double exponent = 0.0;
    double amplitude = 0.0;  // signed: the common sign of y - plateau in the window
    double r_squared = 0.0;
    std::size_t points = 0;
};

/// Least-squares line through (ln x, ln |y|). Needs >= 8 points; throws
/// FitError when any |y| is zero or y changes sign.
PowerLawFit fit_log_log(std::span<const double> x, std::span<const double> y);

/// Fit of ln|y - plateau| against ln(Bt) over grid times in [t_lo, t_hi].
/// The plateau is exp(-A Gamma(s-1)) for P_x and C_x (s > 1), A Gamma(s-1)
/// for gamma (s > 1), 1 for phi, and 0 otherwise.
PowerLawFit fit_power_law(const analytic::CorrelatorSeries& series, Column column, double t_lo, double t_hi,
                          bool subtract_plateau);

/// Coefficient c of y ~ 1 - c (Bt)^2 from a regression of (1 - y)/(Bt)^2
/// on (Bt)^2 over grid times in [t_lo, t_hi]; the intercept is c.
double fit_quadratic_coefficient(const analytic::CorrelatorSeries& series, Column column, double t_lo,
                                 double t_hi);

/// Indices of the strict local maxima of |y| (interior points only).
std::vector<std::size_t> envelope_maxima(std::span<const double> y);

/// Local log-log slopes d ln|y| / d ln x by central differences (one-sided at the ends).
std::vector<double> local_slopes(std::span<const double> x, std::span<const double> y);

/// Locates the crossover between an early power law x^before and a late one
/// x^after from the local slopes, using the two-term model
/// slope(x) = after + (before - after) / (1 + x / x_cr). Each point whose slope
/// lies strictly between the two exponents yields an estimate of x_cr; the
/// median is returned. Throws FitError if no point qualifies.
double locate_crossover(std::span<const double> x, std::span<const double> y, double before, double after);

double column_value(const analytic::CorrelatorPoint& point, Column column) noexcept;

}  // namespace dephasing::asymptotics
