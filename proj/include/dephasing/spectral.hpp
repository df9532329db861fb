// spectral.hpp: bath and model parameter records, power-law spectral density.
//
// Units: hbar = k_B = 1. The cutoff carries the energy scale; times are raw t
// (dimensionless products cutoff*t are formed by callers).

#pragma once

#include <string_view>

namespace dephasing {

enum class BathKind { SubOhmic, Ohmic, SuperOhmic };

std::string_view to_string(BathKind kind) noexcept;

/// Power-law bath with exponential cutoff, J(w) = pi A B^(1-s) w^s exp(-w/B),
/// plus the strength of the anti-Hermitian bath term.
///
/// Invariants (checked on construction, DomainError otherwise):
/// exponent > 0, coupling >= 0, cutoff > 0, non_hermiticity >= 0, all finite.
class BathSpec {
public:
    BathSpec(double exponent, double coupling, double cutoff, double non_hermiticity = 0.0);

    double exponent() const noexcept { return exponent_; }
    double coupling() const noexcept { return coupling_; }
    double cutoff() const noexcept { return cutoff_; }
    double non_hermiticity() const noexcept { return non_hermiticity_; }

    bool is_hermitian() const noexcept { return non_hermiticity_ == 0.0; }

    BathSpec with_coupling(double coupling) const;
    BathSpec with_cutoff(double cutoff) const;
    BathSpec with_non_hermiticity(double tau) const;

    friend bool operator==(const BathSpec&, const BathSpec&) = default;

private:
    double exponent_;
    double coupling_;
    double cutoff_;
    double non_hermiticity_;
};

/// Qubit bias and temperature on top of the bath. Temperature is only honoured
/// by the numerical oracles; the closed forms require temperature == 0.
class ModelSpec {
public:
    explicit ModelSpec(BathSpec bath, double bias = 0.0, double temperature = 0.0);

    const BathSpec& bath() const noexcept { return bath_; }
    double bias() const noexcept { return bias_; }
    double temperature() const noexcept { return temperature_; }

    ModelSpec with_bath(const BathSpec& bath) const { return ModelSpec(bath, bias_, temperature_); }
    ModelSpec with_bias(double bias) const { return ModelSpec(bath_, bias, temperature_); }

    friend bool operator==(const ModelSpec&, const ModelSpec&) = default;

private:
    BathSpec bath_;
    double bias_;
    double temperature_;
};

/// Bare (non_hermiticity ignored) spectral function J(omega). DomainError for omega < 0.
double spectral_density(const BathSpec& bath, double omega);

/// Exact comparison of the stored exponent against 1.
BathKind classify_bath(const BathSpec& bath) noexcept;

}  // namespace dephasing
