#include "dephasing/analytic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dephasing/errors.hpp"
#include "dephasing/numerics.hpp"
#include "dephasing/parallel.hpp"

namespace dephasing::analytic {

namespace {

void require_closed_form_bath(const BathSpec& bath, const char* op) {
    if (!bath.is_hermitian())
        throw DomainError(std::string(op) +
                          ": closed forms take a Hermitian bath; renormalize a non-Hermitian one first");
}

void require_time(double t, const char* op) {
    if (!std::isfinite(t) || !(t >= 0.0)) throw DomainError(std::string(op) + ": t must be finite and >= 0");
}

void require_zero_temperature(const ModelSpec& model, const char* op) {
    if (model.temperature() != 0.0)
        throw DomainError(std::string(op) + ": closed forms hold at zero temperature only");
}

// Pieces shared by gamma and the phase integral for s != 1:
// (1+x^2)^((1-s)/2) = exp(-a), (s-1) atan(x) = b.
struct PowerTrig {
    double half_log;  // ln(1+x^2) / 2
    double theta;     // atan(x)
};

PowerTrig power_trig(double x) {
    return {0.5 * numerics::stable_log1p_sq(x), std::atan(x)};
}

// (1 + x^2)^(-A/2), through pow while 1 + x^2 is representable.
double ohmic_envelope(double coupling, double x) {
    if (x < 1e150) return std::pow(1.0 + x * x, -0.5 * coupling);
    return std::exp(-0.5 * coupling * numerics::stable_log1p_sq(x));
}

}  // namespace

TimeGrid::TimeGrid(std::vector<double> times, Spacing spacing) : times_(std::move(times)), spacing_(spacing) {
    if (times_.empty()) throw DomainError("TimeGrid: no sample times");
    for (std::size_t i = 0; i < times_.size(); ++i) {
        const double t = times_[i];
        if (!std::isfinite(t) || t < 0.0) throw DomainError("TimeGrid: times must be finite and >= 0");
        if (spacing_ == Spacing::Log && !(t > 0.0)) throw DomainError("TimeGrid: log spacing requires t > 0");
        if (i > 0 && !(t > times_[i - 1])) throw DomainError("TimeGrid: times must be strictly increasing");
    }
}

TimeGrid TimeGrid::linear(double t_min, double t_max, std::size_t points) {
    if (points < 2) throw DomainError("TimeGrid::linear: need at least 2 points");
    if (!(t_min < t_max)) throw DomainError("TimeGrid::linear: t_min must be < t_max");
    std::vector<double> times(points);
    const double span = t_max - t_min;
    const auto last = static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) times[i] = t_min + span * (static_cast<double>(i) / last);
    times.back() = t_max;
    return TimeGrid(std::move(times), Spacing::Linear);
}

TimeGrid TimeGrid::log(double t_min, double t_max, std::size_t points) {
    if (points < 2) throw DomainError("TimeGrid::log: need at least 2 points");
    if (!(t_min > 0.0) || !(t_min < t_max)) throw DomainError("TimeGrid::log: need 0 < t_min < t_max");
    const double lo = std::log10(t_min);
    const double hi = std::log10(t_max);
    std::vector<double> times(points);
    const auto last = static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        const double e = lo + (hi - lo) * static_cast<double>(i) / last;
        times[i] = std::pow(10.0, e);
    }
    times.front() = t_min;
    times.back() = t_max;
    return TimeGrid(std::move(times), Spacing::Log);
}

std::string_view to_string(Source source) noexcept {
    switch (source) {
        case Source::ClosedForm: return "closed";
        case Source::QuadratureOracle: return "quadrature";
        case Source::DiscreteBathOracle: return "mode_sum";
    }
    return "unknown";
}

double gamma_closed(const BathSpec& bath, double t) {
    require_closed_form_bath(bath, "gamma_closed");
    require_time(t, "gamma_closed");
    const double coupling = bath.coupling();
    if (t == 0.0 || coupling == 0.0) return 0.0;
    const double x = bath.cutoff() * t;
    const double s = bath.exponent();
    if (s == 1.0) return 0.5 * coupling * numerics::stable_log1p_sq(x);

    const auto [half_log, theta] = power_trig(x);
    const double eps = s - 1.0;
    if (std::abs(eps) < kOhmicLimitBand) {
        // Gamma(eps) = 1/eps - euler + O(eps); bracket = eps L - eps^2 (L^2 - theta^2)/2 + O(eps^3)
        const double correction = 0.5 * (half_log * half_log - theta * theta) + std::numbers::egamma * half_log;
        return coupling * (half_log - eps * correction);
    }
    const double a = eps * half_log;
    const double b = eps * theta;
    const double sin_half_b = std::sin(0.5 * b);
    // 1 - e^{-a} cos b without cancellation at small x
    const double bracket = -std::expm1(-a) * std::cos(b) + 2.0 * sin_half_b * sin_half_b;
    return coupling * numerics::gamma_fn(eps) * bracket;
}

double phase_integral_closed(const BathSpec& bath, double t) {
    require_closed_form_bath(bath, "phase_integral_closed");
    require_time(t, "phase_integral_closed");
    const double coupling = bath.coupling();
    if (t == 0.0 || coupling == 0.0) return 0.0;
    const double x = bath.cutoff() * t;
    const double s = bath.exponent();
    if (s == 1.0) return coupling * std::atan(x);

    const auto [half_log, theta] = power_trig(x);
    const double eps = s - 1.0;
    if (std::abs(eps) < kOhmicLimitBand) {
        // e^{-eps L} sin(eps theta) = eps theta - eps^2 L theta + O(eps^3)
        return coupling * theta * (1.0 - eps * (half_log + std::numbers::egamma));
    }
    return coupling * numerics::gamma_fn(eps) * std::exp(-eps * half_log) * std::sin(eps * theta);
}

double phi_fn(const BathSpec& bath, double t) {
    require_closed_form_bath(bath, "phi_fn");
    require_time(t, "phi_fn");
    const double x = bath.cutoff() * t;
    if (bath.exponent() == 1.0 && x > 1.0) {
        // A atan(x) = A pi/2 - A atan(1/x)
        const double coupling = bath.coupling();
        const double rest = coupling * std::atan(1.0 / x);
        return numerics::cos_pi(0.5 * coupling) * std::cos(rest) + numerics::sin_pi(0.5 * coupling) * std::sin(rest);
    }
    return std::cos(phase_integral_closed(bath, t));
}

namespace {

double decoherence_envelope(const BathSpec& bath, double t) {
    if (bath.exponent() == 1.0) return ohmic_envelope(bath.coupling(), bath.cutoff() * t);
    return std::exp(-gamma_closed(bath, t));
}

double sign_of(double v) noexcept { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

}  // namespace

double p_x(const ModelSpec& model, double t) {
    require_zero_temperature(model, "p_x");
    require_closed_form_bath(model.bath(), "p_x");
    require_time(t, "p_x");
    const double envelope = decoherence_envelope(model.bath(), t);
    if (model.bias() == 0.0) return envelope;
    return envelope * std::cos(model.bias() * t);
}

double c_x(const ModelSpec& model, double t) {
    return evaluate_point(model, t).c_x;
}

CorrelatorPoint evaluate_point(const ModelSpec& model, double t) {
    require_zero_temperature(model, "evaluate_point");
    const BathSpec& bath = model.bath();
    CorrelatorPoint pt;
    pt.t = t;
    pt.gamma = gamma_closed(bath, t);
    pt.phase_integral = phase_integral_closed(bath, t);
    pt.phi = phi_fn(bath, t);
    const double envelope = decoherence_envelope(bath, t);
    const double eps = model.bias();
    if (eps == 0.0) {
        pt.p_x = envelope;
        pt.c_x = pt.p_x * pt.phi;
    } else {
        const double et = eps * t;
        pt.p_x = envelope * std::cos(et);
        pt.c_x = envelope * (std::cos(et) * pt.phi + sign_of(eps) * std::sin(et) * std::sin(pt.phase_integral));
    }
    return pt;
}

CorrelatorSeries evaluate_series(const ModelSpec& model, const TimeGrid& grid) {
    require_zero_temperature(model, "evaluate_series");
    require_closed_form_bath(model.bath(), "evaluate_series");
    std::vector<CorrelatorPoint> points(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) { points[i] = evaluate_point(model, grid[i]); });
    return CorrelatorSeries{model, grid, std::move(points), Source::ClosedForm};
}

}  // namespace dephasing::analytic
