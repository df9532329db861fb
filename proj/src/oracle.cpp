#include "dephasing/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dephasing/errors.hpp"

namespace dephasing::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

void require_time(double t, const char* op) {
    if (!std::isfinite(t) || t < 0.0) throw DomainError(std::string(op) + ": t must be finite and >= 0");
}

void require_hermitian(const BathSpec& bath, const char* op) {
    if (!bath.is_hermitian())
        throw DomainError(std::string(op) + ": oracle integrals take a Hermitian bath; renormalize first");
}

void require_validated_range(const BathSpec& bath, double t, const char* op) {
    if (bath.cutoff() * t > kQuadratureMaxScaledTime)
        throw DomainError(std::string(op) + ": B t beyond the validated quadrature range (1e3)");
}

void require_infrared_convergence(const ModelSpec& model, const char* op) {
    if (model.temperature() > 0.0 && model.bath().exponent() <= 1.0)
        throw DivergenceError(std::string(op) +
                              ": the thermal kernel is infrared divergent for s <= 1 at T > 0");
}

// B^(1-s) w^s exp(-w/B) = B exp(s ln(w/B) - w/B); J(w) / pi = A * this.
double power_law_weight(const BathSpec& bath, double w) {
    if (w <= 0.0) return 0.0;
    const double b = bath.cutoff();
    const double x = w / b;
    return b * std::exp(bath.exponent() * std::log(x) - x);
}

numerics::IntegrandShape shape_for(const BathSpec& bath, double t) {
    numerics::IntegrandShape shape;
    shape.scale = bath.cutoff();
    if (t > 0.0) shape.max_panel_width = kPi / t;
    return shape;
}

}  // namespace

DiscreteBath::DiscreteBath(std::vector<Mode> modes, Sampling sampling, double omega_min, double omega_max,
                           double recurrence_time)
    : modes_(std::move(modes)),
      sampling_(sampling),
      omega_min_(omega_min),
      omega_max_(omega_max),
      recurrence_time_(recurrence_time) {
    if (modes_.empty()) throw DomainError("DiscreteBath: no modes");
    for (const Mode& m : modes_)
        if (!(m.frequency > 0.0) || !std::isfinite(m.coupling))
            throw DomainError("DiscreteBath: mode frequencies must be > 0 and couplings finite");
}

DiscreteBath DiscreteBath::sample(const BathSpec& bath, std::size_t count, Sampling sampling, double omega_min,
                                  double omega_max) {
    require_hermitian(bath, "DiscreteBath::sample");
    if (count == 0) throw DomainError("DiscreteBath::sample: need at least one mode");
    if (!(omega_max > 0.0)) throw DomainError("DiscreteBath::sample: omega_max must be > 0");
    const double a = bath.coupling();
    std::vector<Mode> modes(count);
    const auto k_count = static_cast<double>(count);

    if (sampling == Sampling::LinearFreq) {
        const double dw = omega_max / k_count;
        for (std::size_t k = 0; k < count; ++k) {
            const double w = static_cast<double>(k + 1) * dw;
            modes[k] = {w, std::sqrt(a * power_law_weight(bath, w) * dw)};
        }
        return DiscreteBath(std::move(modes), sampling, dw, omega_max, 2.0 * kPi / dw);
    }

    if (!(omega_min > 0.0) || !(omega_min < omega_max))
        throw DomainError("DiscreteBath::sample: log sampling needs 0 < omega_min < omega_max");
    const double log_span = std::log(omega_max / omega_min);
    const double ratio_step = log_span / k_count;
    for (std::size_t k = 0; k < count; ++k) {
        const double lo = omega_min * std::exp(ratio_step * static_cast<double>(k));
        const double hi = omega_min * std::exp(ratio_step * static_cast<double>(k + 1));
        const double w = std::sqrt(lo * hi);
        modes[k] = {w, std::sqrt(a * power_law_weight(bath, w) * (hi - lo))};
    }
    const double spacing_at_cutoff = bath.cutoff() * std::expm1(ratio_step);
    return DiscreteBath(std::move(modes), sampling, omega_min, omega_max, 2.0 * kPi / spacing_at_cutoff);
}

DiscreteBath DiscreteBath::sample(const BathSpec& bath, std::size_t count, Sampling sampling) {
    const double b = bath.cutoff();
    return sample(bath, count, sampling, kDefaultLogMin * b, kDefaultMax * b);
}

double DiscreteBath::total_weight() const {
    std::vector<double> w(modes_.size());
    std::transform(modes_.begin(), modes_.end(), w.begin(), [](const Mode& m) { return m.coupling * m.coupling; });
    return numerics::pairwise_sum(w);
}

ModeSumResult gamma_mode_sum(const DiscreteBath& bath, double t, double temperature) {
    require_time(t, "gamma_mode_sum");
    if (!(temperature >= 0.0)) throw DomainError("gamma_mode_sum: temperature must be >= 0");
    ModeSumResult r;
    r.beyond_recurrence_window = t > 0.1 * bath.recurrence_time();
    if (t == 0.0) return r;
    const auto modes = bath.modes();
    std::vector<double> decay(modes.size());
    std::vector<double> phase(modes.size());
    for (std::size_t k = 0; k < modes.size(); ++k) {
        const double w = modes[k].frequency;
        const double weight = (modes[k].coupling / w) * (modes[k].coupling / w);
        const double half = std::sin(0.5 * w * t);
        double thermal = 1.0;
        if (temperature > 0.0) thermal = 1.0 / std::tanh(0.5 * w / temperature);
        decay[k] = weight * 2.0 * half * half * thermal;
        phase[k] = weight * std::sin(w * t);
    }
    r.gamma = numerics::pairwise_sum(decay);
    r.phase = numerics::pairwise_sum(phase);
    return r;
}

double gamma_quadrature(const ModelSpec& model, double t, const numerics::QuadratureConfig& cfg) {
    const BathSpec& bath = model.bath();
    require_hermitian(bath, "gamma_quadrature");
    require_time(t, "gamma_quadrature");
    require_infrared_convergence(model, "gamma_quadrature");
    require_validated_range(bath, t, "gamma_quadrature");
    if (t == 0.0 || bath.coupling() == 0.0) return 0.0;

    const double a = bath.coupling();
    const double temperature = model.temperature();
    // (1 - cos wt) / w^2 = (t^2 / 2) sinc^2(wt / 2)
    auto integrand = [&](double w) {
        const double sc = numerics::sinc(0.5 * w * t);
        const double oscillation = 0.5 * t * t * sc * sc;
        if (temperature == 0.0) return a * power_law_weight(bath, w) * oscillation;
        // coth(w / 2T) = (2T / w) * x / tanh(x) with x = w / 2T
        const double thermal = 2.0 * temperature * numerics::x_over_tanh(0.5 * w / temperature);
        return a * power_law_weight(bath, w) / w * thermal * oscillation;
    };
    return numerics::integrate_semi_infinite(integrand, cfg, shape_for(bath, t)).value;
}

double phase_quadrature(const BathSpec& bath, double t, const numerics::QuadratureConfig& cfg) {
    require_hermitian(bath, "phase_quadrature");
    require_time(t, "phase_quadrature");
    require_validated_range(bath, t, "phase_quadrature");
    if (t == 0.0 || bath.coupling() == 0.0) return 0.0;
    const double a = bath.coupling();
    // sin(wt) / w^2 * w^s = w^(s-1) t sinc(wt)
    auto integrand = [&](double w) { return a * power_law_weight(bath, w) / w * t * numerics::sinc(w * t); };
    return numerics::integrate_semi_infinite(integrand, cfg, shape_for(bath, t)).value;
}

double c_x_finite_T(const ModelSpec& model, double t, const numerics::QuadratureConfig& cfg) {
    require_infrared_convergence(model, "c_x_finite_T");
    const double gamma = gamma_quadrature(model, t, cfg);
    const double phase = phase_quadrature(model.bath(), t, cfg);
    const double eps = model.bias();
    const double temperature = model.temperature();
    double polarization = 0.0;
    if (temperature > 0.0) polarization = std::tanh(0.5 * eps / temperature);
    else polarization = eps > 0.0 ? 1.0 : (eps < 0.0 ? -1.0 : 0.0);
    const double et = eps * t;
    return std::exp(-gamma) * (std::cos(et) * std::cos(phase) + polarization * std::sin(et) * std::sin(phase));
}

Eigen::Matrix2cd plus_x_state() {
    Eigen::Matrix2cd rho;
    rho.setConstant(std::complex<double>(0.5, 0.0));
    return rho;
}

Eigen::Matrix2cd reduced_density_matrix(const ModelSpec& model, double t, const Eigen::Matrix2cd& rho0,
                                        const numerics::QuadratureConfig& cfg) {
    const double gamma = gamma_quadrature(model, t, cfg);
    const double decay = std::exp(-gamma);
    const std::complex<double> rotation = std::polar(1.0, -model.bias() * t);
    Eigen::Matrix2cd rho = rho0;
    rho(0, 1) = decay * rotation * rho0(0, 1);
    rho(1, 0) = decay * std::conj(rotation) * rho0(1, 0);
    return rho;
}

double p_x_density_matrix(const ModelSpec& model, double t, const numerics::QuadratureConfig& cfg) {
    Eigen::Matrix2cd sigma_x;
    sigma_x << 0.0, 1.0, 1.0, 0.0;
    const Eigen::Matrix2cd rho = reduced_density_matrix(model, t, plus_x_state(), cfg);
    return (rho * sigma_x).trace().real();
}

BogoliubovMode bogoliubov_mode(double omega, double lambda, double tau) {
    if (!(omega > 0.0)) throw DomainError("bogoliubov_mode: omega must be > 0");
    if (!(tau >= 0.0)) throw DomainError("bogoliubov_mode: tau must be >= 0");
    // w a^dag a + w tau^2 (a + a^dag)^2 = diag * a^dag a + (pair / 2)(a^2 + a^dag^2) + const
    const double diag = omega * (1.0 + 2.0 * tau * tau);
    const double pair = 2.0 * omega * tau * tau;
    // [b, H] = W b with b = alpha a + beta a^dag gives this eigenproblem for (alpha, beta).
    Eigen::Matrix2d dynamical;
    dynamical << diag, -pair, pair, -diag;
    Eigen::EigenSolver<Eigen::Matrix2d> solver(dynamical);
    const auto values = solver.eigenvalues();
    const int positive = values(0).real() > values(1).real() ? 0 : 1;
    const Eigen::Vector2d vec = solver.eigenvectors().col(positive).real();
    const double norm = vec(0) * vec(0) - vec(1) * vec(1);
    if (!(norm > 0.0)) throw DomainError("bogoliubov_mode: no positive-norm solution");
    const double scale = (vec(0) < 0.0 ? -1.0 : 1.0) / std::sqrt(norm);
    const double alpha = vec(0) * scale;
    const double beta = vec(1) * scale;
    const double v = alpha;
    const double u = -beta;
    return {values(positive).real(), lambda * (v + u), u, v};
}

DiscreteBath renormalize_modes(const DiscreteBath& bath, double tau) {
    std::vector<Mode> modes;
    modes.reserve(bath.size());
    for (const Mode& m : bath.modes()) {
        const BogoliubovMode b = bogoliubov_mode(m.frequency, m.coupling, tau);
        modes.push_back({b.frequency, b.coupling});
    }
    const double stretch = modes.front().frequency / bath.modes().front().frequency;
    return DiscreteBath(std::move(modes), bath.sampling(), bath.omega_min() * stretch, bath.omega_max() * stretch,
                        bath.recurrence_time() / stretch);
}

}  // namespace dephasing::oracle
