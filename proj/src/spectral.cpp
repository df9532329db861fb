#include "dephasing/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dephasing/errors.hpp"

namespace dephasing {

std::string_view to_string(BathKind kind) noexcept {
    switch (kind) {
        case BathKind::SubOhmic: return "sub-Ohmic";
        case BathKind::Ohmic: return "Ohmic";
        case BathKind::SuperOhmic: return "super-Ohmic";
    }
    return "unknown";
}

BathSpec::BathSpec(double exponent, double coupling, double cutoff, double non_hermiticity)
    : exponent_(exponent), coupling_(coupling), cutoff_(cutoff), non_hermiticity_(non_hermiticity) {
    if (!std::isfinite(exponent) || !(exponent > 0.0))
        throw DomainError("bath exponent must be finite and > 0, got " + std::to_string(exponent));
    if (!std::isfinite(coupling) || !(coupling >= 0.0))
        throw DomainError("bath coupling must be finite and >= 0, got " + std::to_string(coupling));
    if (!std::isfinite(cutoff) || !(cutoff > 0.0))
        throw DomainError("bath cutoff must be finite and > 0, got " + std::to_string(cutoff));
    if (!std::isfinite(non_hermiticity) || !(non_hermiticity >= 0.0))
        throw DomainError("non-Hermiticity must be finite and >= 0, got " +
                          std::to_string(non_hermiticity));
}

BathSpec BathSpec::with_coupling(double coupling) const {
    return BathSpec(exponent_, coupling, cutoff_, non_hermiticity_);
}

BathSpec BathSpec::with_cutoff(double cutoff) const {
    return BathSpec(exponent_, coupling_, cutoff, non_hermiticity_);
}

BathSpec BathSpec::with_non_hermiticity(double tau) const {
    return BathSpec(exponent_, coupling_, cutoff_, tau);
}

ModelSpec::ModelSpec(BathSpec bath, double bias, double temperature)
    : bath_(bath), bias_(bias), temperature_(temperature) {
    if (!std::isfinite(bias)) throw DomainError("bias must be finite");
    if (!std::isfinite(temperature) || !(temperature >= 0.0))
        throw DomainError("temperature must be finite and >= 0, got " + std::to_string(temperature));
}

double spectral_density(const BathSpec& bath, double omega) {
    if (!(omega >= 0.0)) throw DomainError("spectral_density: omega must be >= 0");
    if (omega == 0.0 || bath.coupling() == 0.0) return 0.0;
    const double s = bath.exponent();
    const double b = bath.cutoff();
    // pi A B (w/B)^s e^{-w/B}, grouped to stay finite for large w/B.
    const double x = omega / b;
    return std::numbers::pi * bath.coupling() * b * std::exp(s * std::log(x) - x);
}

BathKind classify_bath(const BathSpec& bath) noexcept {
    const double s = bath.exponent();
    if (s < 1.0) return BathKind::SubOhmic;
    if (s == 1.0) return BathKind::Ohmic;
    return BathKind::SuperOhmic;
}

}  // namespace dephasing
