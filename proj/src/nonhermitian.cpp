#include "dephasing/nonhermitian.hpp"

#include <algorithm>
#include <cmath>

#include "dephasing/analytic.hpp"
#include "dephasing/errors.hpp"

namespace dephasing::nonhermitian {

RenormalizedParams renormalize(const BathSpec& bath) {
    const double tau = bath.non_hermiticity();
    const double factor = 1.0 + 4.0 * tau * tau;
    const double root = std::sqrt(factor);
    return {bath.coupling() / (factor * root), bath.cutoff() * root, factor};
}

BathSpec effective_bath(const BathSpec& bath) {
    if (bath.is_hermitian()) return bath;
    const RenormalizedParams r = renormalize(bath);
    return BathSpec(bath.exponent(), r.coupling, r.cutoff, 0.0);
}

ModelSpec effective_model(const ModelSpec& model) {
    return model.with_bath(effective_bath(model.bath()));
}

double gamma_nh(const BathSpec& bath, double t) {
    return analytic::gamma_closed(effective_bath(bath), t);
}

double p_x_nh(const BathSpec& bath, double t) {
    return analytic::p_x(ModelSpec(effective_bath(bath)), t);
}

TauDerivative dp_dtau(const BathSpec& bath, double t) {
    if (!std::isfinite(t) || t < 0.0) throw DomainError("dp_dtau: t must be finite and >= 0");
    const double tau = bath.non_hermiticity();
    const double h = std::max(1e-6, 1e-6 * tau);
    const double upper = p_x_nh(bath.with_non_hermiticity(tau + h), t);
    const double lower = p_x_nh(bath.with_non_hermiticity(std::abs(tau - h)), t);

    TauDerivative d{(upper - lower) / (2.0 * h), h, std::nullopt, std::nullopt};
    if (bath.exponent() == 1.0) {
        const RenormalizedParams r = renormalize(bath);
        const double y = r.cutoff * t;
        d.short_time_asymptote = 2.0 / r.factor * r.coupling * y * y * tau;
        if (y > 0.0) d.long_time_asymptote = 12.0 / r.factor * std::pow(y, -r.coupling) * r.coupling * std::log(y) * tau;
    }
    return d;
}

}  // namespace dephasing::nonhermitian
