#include "dephasing/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "dephasing/errors.hpp"
#include "dephasing/numerics.hpp"

namespace dephasing::asymptotics {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

void require_unbiased_ground_state(const ModelSpec& model, const char* op) {
    if (model.temperature() != 0.0 || model.bias() != 0.0)
        throw DomainError(std::string(op) + ": asymptotic laws are for T = 0 and zero bias");
    if (!model.bath().is_hermitian())
        throw DomainError(std::string(op) + ": renormalize a non-Hermitian bath first");
}

bool is_ohmic(double s) noexcept { return std::abs(s - 1.0) < analytic::kOhmicLimitBand; }

// alpha_1 = -A Gamma(s-1) sin(pi s / 2)
double alpha_one(double coupling, double s) {
    return -coupling * numerics::gamma_fn(s - 1.0) * numerics::sin_pi(0.5 * s);
}

// alpha_2 = A Gamma(s) (-1)^(s/2), s even
double alpha_two(double coupling, double s, std::int64_t even_s) {
    const double sign = (even_s / 2) % 2 == 0 ? 1.0 : -1.0;
    return coupling * numerics::gamma_fn(s) * sign;
}

std::optional<double> finite_positive(double v) {
    if (std::isfinite(v) && v > 0.0) return v;
    return std::nullopt;
}

double median(std::vector<double> values) {
    const std::size_t n = values.size();
    std::sort(values.begin(), values.end());
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

IntegerProximity integer_proximity(double value) {
    if (!std::isfinite(value)) throw DomainError("integer_proximity: value must be finite");
    const double nearest = std::nearbyint(value);
    const auto n = static_cast<std::int64_t>(nearest);
    return {value, n, std::abs(value - nearest), n % 2 == 0 ? Parity::Even : Parity::Odd};
}

std::string_view to_string(Regime regime) noexcept {
    switch (regime) {
        case Regime::OhmicGeneric: return "OhmicGeneric";
        case Regime::OhmicOddA: return "OhmicOddA";
        case Regime::SuperOhmicGeneric: return "SuperOhmicGeneric";
        case Regime::SuperOhmicEvenS: return "SuperOhmicEvenS";
        case Regime::SuperOhmicOddS: return "SuperOhmicOddS";
        case Regime::SubOhmic: return "SubOhmic";
    }
    return "unknown";
}

ShortTimeCoefficients short_time_coeffs(const ModelSpec& model) {
    require_unbiased_ground_state(model, "short_time_coeffs");
    const double coupling = model.bath().coupling();
    const double s = model.bath().exponent();
    if (s == 1.0) return {0.5 * coupling, 0.5 * coupling * (1.0 + coupling)};
    const double a_gamma = coupling * numerics::gamma_fn(s);
    return {0.5 * s * a_gamma, 0.5 * a_gamma * (a_gamma + s)};
}

RegimeReport long_time_p(const ModelSpec& model) {
    require_unbiased_ground_state(model, "long_time_p");
    const double coupling = model.bath().coupling();
    const double s = model.bath().exponent();

    RegimeReport r{};
    if (is_ohmic(s)) {
        r.regime = Regime::OhmicGeneric;
        r.form = DecayForm::PowerLaw;
        r.exponent = -coupling;
        r.amplitude = 1.0;
        return r;
    }
    const double zero_point = coupling * numerics::gamma_fn(s - 1.0);
    r.prefactor = std::exp(-zero_point);
    if (s < 1.0) {
        r.regime = Regime::SubOhmic;
        r.form = DecayForm::StretchedExponential;
        r.exponent = 1.0 - s;
        r.amplitude = alpha_one(coupling, s);
        r.rate_negative = r.amplitude < 0.0;
        return r;
    }
    r.form = DecayForm::PlateauApproach;
    r.plateau = r.prefactor;
    const IntegerProximity prox = integer_proximity(s);
    if (prox.is_even_integer()) {
        r.regime = Regime::SuperOhmicEvenS;
        r.exponent = -s;
        r.amplitude = alpha_two(coupling, s, prox.nearest_integer);
    } else {
        r.regime = prox.is_odd_integer() ? Regime::SuperOhmicOddS : Regime::SuperOhmicGeneric;
        r.exponent = 1.0 - s;
        r.amplitude = alpha_one(coupling, s);
        if (!prox.is_integer()) r.crossover = finite_positive(crossover_time(model, CrossoverFamily::EvenS_P));
    }
    r.rate_negative = r.amplitude < 0.0;
    return r;
}

RegimeReport long_time_c(const ModelSpec& model) {
    require_unbiased_ground_state(model, "long_time_c");
    const double coupling = model.bath().coupling();
    const double s = model.bath().exponent();

    RegimeReport r{};
    if (is_ohmic(s)) {
        r.form = DecayForm::PowerLaw;
        const IntegerProximity a = integer_proximity(coupling);
        if (a.is_odd_integer()) {
            r.regime = Regime::OhmicOddA;
            const double sign = ((a.nearest_integer - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
            r.amplitude = sign * coupling;
            r.exponent = -coupling - 1.0;
        } else {
            r.regime = Regime::OhmicGeneric;
            r.amplitude = numerics::cos_pi(0.5 * coupling);
            r.exponent = -coupling;
            r.crossover = finite_positive(crossover_time(model, CrossoverFamily::OhmicOddA));
        }
        return r;
    }

    const double gamma_sm1 = numerics::gamma_fn(s - 1.0);
    r.prefactor = std::exp(-coupling * gamma_sm1);
    if (s < 1.0) {
        r.regime = Regime::SubOhmic;
        r.form = DecayForm::StretchedExponential;
        r.exponent = 1.0 - s;
        r.amplitude = alpha_one(coupling, s);
        r.rate_negative = r.amplitude < 0.0;
        r.oscillation = {FrequencyLaw::OneMinusS, coupling * gamma_sm1 * numerics::cos_pi(0.5 * s)};
        return r;
    }

    r.form = DecayForm::PlateauApproach;
    r.plateau = r.prefactor;
    const IntegerProximity prox = integer_proximity(s);
    if (prox.is_even_integer()) {
        r.regime = Regime::SuperOhmicEvenS;
        r.exponent = -s;
        r.amplitude = alpha_two(coupling, s, prox.nearest_integer);
        r.oscillation = {FrequencyLaw::OneMinusS, coupling * gamma_sm1};
    } else if (prox.is_odd_integer()) {
        r.regime = Regime::SuperOhmicOddS;
        r.exponent = 1.0 - s;
        r.amplitude = alpha_one(coupling, s);
        r.oscillation = {FrequencyLaw::MinusS, coupling * numerics::gamma_fn(s)};
    } else {
        r.regime = Regime::SuperOhmicGeneric;
        r.exponent = 1.0 - s;
        r.amplitude = alpha_one(coupling, s);
        r.oscillation = {FrequencyLaw::OneMinusS, coupling * gamma_sm1 * numerics::cos_pi(0.5 * s)};
        const auto family = prox.parity == Parity::Even ? CrossoverFamily::EvenS_C : CrossoverFamily::OddS_C;
        r.crossover = finite_positive(crossover_time(model, family));
    }
    r.rate_negative = r.amplitude < 0.0;
    return r;
}

double crossover_time(const ModelSpec& model, CrossoverFamily family) {
    const double s = model.bath().exponent();
    if (family == CrossoverFamily::OhmicOddA) {
        const double coupling = model.bath().coupling();
        if (integer_proximity(coupling).is_odd_integer()) return kInfinity;
        const double half = 0.5 * coupling;
        return coupling * std::abs(numerics::sin_pi(half) / numerics::cos_pi(half));
    }
    if (!(s > 1.0)) throw DomainError("crossover_time: the exponent families need s > 1");
    const IntegerProximity prox = integer_proximity(s);
    const double half = 0.5 * s;
    switch (family) {
        case CrossoverFamily::EvenS_P:
        case CrossoverFamily::EvenS_C:
            if (prox.is_even_integer()) return kInfinity;
            return std::abs(numerics::cos_pi(half) / numerics::sin_pi(half)) / (s - 1.0);
        case CrossoverFamily::OddS_phi:
        case CrossoverFamily::OddS_C:
            if (prox.is_odd_integer()) return kInfinity;
            return (s - 1.0) * std::abs(numerics::sin_pi(half) / numerics::cos_pi(half));
        case CrossoverFamily::OhmicOddA: break;
    }
    return kInfinity;
}

double column_value(const analytic::CorrelatorPoint& point, Column column) noexcept {
    switch (column) {
        case Column::Gamma: return point.gamma;
        case Column::PhaseIntegral: return point.phase_integral;
        case Column::Phi: return point.phi;
        case Column::Px: return point.p_x;
        case Column::Cx: return point.c_x;
    }
    return 0.0;
}

PowerLawFit fit_log_log(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw FitError("fit_log_log: x and y differ in length");
    const std::size_t n = x.size();
    if (n < 8) throw FitError("fit_log_log: need at least 8 points, got " + std::to_string(n));
    double sign = 0.0;
    std::vector<double> lx(n);
    std::vector<double> ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(x[i] > 0.0)) throw FitError("fit_log_log: abscissa must be > 0");
        if (!(std::abs(y[i]) > 0.0) || !std::isfinite(y[i]))
            throw FitError("fit_log_log: zero or non-finite ordinate; extract an envelope first");
        const double si = y[i] > 0.0 ? 1.0 : -1.0;
        if (sign == 0.0) sign = si;
        else if (si != sign) throw FitError("fit_log_log: ordinate changes sign; extract an envelope first");
        lx[i] = std::log(x[i]);
        ly[i] = std::log(std::abs(y[i]));
    }
    const double nd = static_cast<double>(n);
    const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / nd;
    const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / nd;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = lx[i] - mx;
        const double dy = ly[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (!(sxx > 0.0)) throw FitError("fit_log_log: abscissa has no spread");
    PowerLawFit fit;
    fit.exponent = sxy / sxx;
    fit.amplitude = sign * std::exp(my - fit.exponent * mx);
    fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    fit.points = n;
    return fit;
}

namespace {

double plateau_for(const ModelSpec& model, Column column) {
    const double s = model.bath().exponent();
    switch (column) {
        case Column::Phi: return 1.0;
        case Column::Px:
        case Column::Cx:
            if (s > 1.0 && !is_ohmic(s)) return std::exp(-model.bath().coupling() * numerics::gamma_fn(s - 1.0));
            return 0.0;
        case Column::Gamma:
            if (s > 1.0 && !is_ohmic(s)) return model.bath().coupling() * numerics::gamma_fn(s - 1.0);
            return 0.0;
        case Column::PhaseIntegral: return 0.0;
    }
    return 0.0;
}

struct Window {
    std::vector<double> x;
    std::vector<double> y;
};

Window select_window(const analytic::CorrelatorSeries& series, Column column, double t_lo, double t_hi) {
    const auto times = series.grid.times();
    if (!(t_lo <= t_hi)) throw FitError("fit window is empty");
    if (t_lo < times.front() || t_hi > times.back()) throw FitError("fit window extends beyond the grid");
    const double cutoff = series.model.bath().cutoff();
    Window w;
    for (std::size_t i = 0; i < series.points.size(); ++i) {
        const double t = series.points[i].t;
        if (t < t_lo || t > t_hi) continue;
        w.x.push_back(cutoff * t);
        w.y.push_back(column_value(series.points[i], column));
    }
    return w;
}

}  // namespace

PowerLawFit fit_power_law(const analytic::CorrelatorSeries& series, Column column, double t_lo, double t_hi,
                          bool subtract_plateau) {
    Window w = select_window(series, column, t_lo, t_hi);
    if (subtract_plateau) {
        const double plateau = plateau_for(series.model, column);
        for (double& v : w.y) v -= plateau;
    }
    return fit_log_log(w.x, w.y);
}

double fit_quadratic_coefficient(const analytic::CorrelatorSeries& series, Column column, double t_lo,
                                 double t_hi) {
    const Window w = select_window(series, column, t_lo, t_hi);
    const std::size_t n = w.x.size();
    if (n < 3) throw FitError("fit_quadratic_coefficient: need at least 3 points in the window");
    std::vector<double> u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(w.x[i] > 0.0)) throw FitError("fit_quadratic_coefficient: window must exclude t = 0");
        u[i] = w.x[i] * w.x[i];
        v[i] = (1.0 - w.y[i]) / u[i];
    }
    const double nd = static_cast<double>(n);
    const double mu = std::accumulate(u.begin(), u.end(), 0.0) / nd;
    const double mv = std::accumulate(v.begin(), v.end(), 0.0) / nd;
    double suu = 0.0, suv = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        suu += (u[i] - mu) * (u[i] - mu);
        suv += (u[i] - mu) * (v[i] - mv);
    }
    const double slope = suu > 0.0 ? suv / suu : 0.0;
    return mv - slope * mu;
}

std::vector<std::size_t> envelope_maxima(std::span<const double> y) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
        const double here = std::abs(y[i]);
        if (here > std::abs(y[i - 1]) && here > std::abs(y[i + 1])) idx.push_back(i);
    }
    return idx;
}

std::vector<double> local_slopes(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw FitError("local_slopes: need matching arrays of >= 2 points");
    const std::size_t n = x.size();
    std::vector<double> lx(n), ly(n), slopes(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(x[i] > 0.0) || !(std::abs(y[i]) > 0.0)) throw FitError("local_slopes: values must be non-zero");
        lx[i] = std::log(x[i]);
        ly[i] = std::log(std::abs(y[i]));
    }
    slopes[0] = (ly[1] - ly[0]) / (lx[1] - lx[0]);
    slopes[n - 1] = (ly[n - 1] - ly[n - 2]) / (lx[n - 1] - lx[n - 2]);
    for (std::size_t i = 1; i + 1 < n; ++i) slopes[i] = (ly[i + 1] - ly[i - 1]) / (lx[i + 1] - lx[i - 1]);
    return slopes;
}

double locate_crossover(std::span<const double> x, std::span<const double> y, double before, double after) {
    const std::vector<double> slopes = local_slopes(x, y);
    const double lo = std::min(before, after);
    const double hi = std::max(before, after);
    std::vector<double> estimates;
    for (std::size_t i = 0; i < slopes.size(); ++i) {
        const double sl = slopes[i];
        if (!(sl > lo && sl < hi)) continue;
        estimates.push_back(x[i] * (sl - after) / (before - sl));
    }
    if (estimates.empty()) throw FitError("locate_crossover: no local slope between the two exponents");
    return median(std::move(estimates));
}

}  // namespace dephasing::asymptotics
