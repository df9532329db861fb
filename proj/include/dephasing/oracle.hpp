// oracle.hpp: numerical ground truth independent of the closed forms.
//
//  * quadrature of the defining frequency integrals (any temperature),
//  * finite mode sums over a discretized bath,
//  * the reduced density matrix built from the decoherence factor,
//  * a per-mode Bogoliubov diagonalization of the non-Hermitian bath term.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dephasing/numerics.hpp"
#include "dephasing/spectral.hpp"

namespace dephasing::oracle {

/// Largest B t at which the quadrature oracle is considered validated.
inline constexpr double kQuadratureMaxScaledTime = 1e3;

/// Default log-sampled band, in units of the cutoff.
inline constexpr double kDefaultLogMin = 1e-14;
inline constexpr double kDefaultMax = 50.0;

enum class Sampling { LinearFreq, LogFreq };

struct Mode {
    double frequency;  // > 0
    double coupling;
};

/// Finite set of bath modes whose delta weights discretize J(w) / pi.
class DiscreteBath {
public:
    DiscreteBath(std::vector<Mode> modes, Sampling sampling, double omega_min, double omega_max,
                 double recurrence_time);

    /// Log sampling: K geometric bins over [omega_min, omega_max], modes at the
    /// geometric bin centres, lambda_k^2 = J(w_k) * width_k / pi.
    /// Linear sampling: w_k = k * dw (k = 1..K, dw = omega_max / K), so every
    /// mode sum is exactly periodic in t with period 2 pi / dw; omega_min is ignored.
    static DiscreteBath sample(const BathSpec& bath, std::size_t count, Sampling sampling, double omega_min,
                               double omega_max);

    /// Defaults: [1e-14 B, 50 B] for LogFreq, (0, 50 B] for LinearFreq.
    static DiscreteBath sample(const BathSpec& bath, std::size_t count, Sampling sampling);

    std::span<const Mode> modes() const noexcept { return modes_; }
    std::size_t size() const noexcept { return modes_.size(); }
    Sampling sampling() const noexcept { return sampling_; }
    double omega_min() const noexcept { return omega_min_; }
    double omega_max() const noexcept { return omega_max_; }

    /// 2 pi / (mode spacing); the spacing is taken at the cutoff for log sampling.
    double recurrence_time() const noexcept { return recurrence_time_; }

    /// sum_k lambda_k^2, to be compared with the integral of J / pi over the band.
    double total_weight() const;

private:
    std::vector<Mode> modes_;
    Sampling sampling_;
    double omega_min_;
    double omega_max_;
    double recurrence_time_;
};

struct ModeSumResult {
    double gamma = 0.0;
    double phase = 0.0;
    bool beyond_recurrence_window = false;  // t > recurrence_time / 10: finite-size revivals expected
};

/// gamma = sum_k (lambda_k / w_k)^2 (1 - cos w_k t) coth(w_k / 2T),
/// phase = sum_k (lambda_k / w_k)^2 sin(w_k t); fixed-order pairwise sums.
ModeSumResult gamma_mode_sum(const DiscreteBath& bath, double t, double temperature = 0.0);

/// Quadrature of the decoherence-factor integral with the coth(w / 2T) kernel.
/// DivergenceError for T > 0 with s <= 1; DomainError beyond kQuadratureMaxScaledTime.
double gamma_quadrature(const ModelSpec& model, double t, const numerics::QuadratureConfig& cfg = {});

/// Quadrature of I(t) = integral of J(w) sin(w t) / (pi w^2).
double phase_quadrature(const BathSpec& bath, double t, const numerics::QuadratureConfig& cfg = {});

/// Equilibrium C_x at temperature T with both integrals by quadrature:
/// exp(-gamma) [cos(eps t) cos I + tanh(eps / 2T) sin(eps t) sin I],
/// tanh -> sgn at T = 0.
double c_x_finite_T(const ModelSpec& model, double t, const numerics::QuadratureConfig& cfg = {});

/// Qubit |+x> state.
Eigen::Matrix2cd plus_x_state();

/// rho_S(t) for initial qubit state rho0 and a thermal bath: populations kept,
/// coherences multiplied by exp(-gamma) exp(-/+ i eps t), gamma by quadrature.
Eigen::Matrix2cd reduced_density_matrix(const ModelSpec& model, double t, const Eigen::Matrix2cd& rho0,
                                        const numerics::QuadratureConfig& cfg = {});

/// Tr[rho_S(t) sigma_x] starting from |+x>.
double p_x_density_matrix(const ModelSpec& model, double t, const numerics::QuadratureConfig& cfg = {});

/// One bath mode w [a^dag a + tau^2 (a + a^dag)^2] + (lambda / 2)(a + a^dag)
/// diagonalized numerically: b = alpha a + beta a^dag with alpha^2 - beta^2 = 1,
/// so a = v b + u b^dag with v = alpha, u = -beta.
struct BogoliubovMode {
    double frequency;  // renormalized w
    double coupling;   // renormalized lambda = lambda (v + u)
    double u;
    double v;
};

BogoliubovMode bogoliubov_mode(double omega, double lambda, double tau);

/// Applies bogoliubov_mode to every mode.
DiscreteBath renormalize_modes(const DiscreteBath& bath, double tau);

}  // namespace dephasing::oracle
