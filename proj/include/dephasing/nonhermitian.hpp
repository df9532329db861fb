// nonhermitian.hpp: the PT-symmetric bath term as an exact parameter map.
//
// The similarity transform exp(-tau w_k x_k^2) followed by a Bogoliubov
// rotation of each mode gives an ordinary pure-dephasing model with
//   w_k -> sqrt(1 + 4 tau^2) w_k,   lambda_k -> (1 + 4 tau^2)^(-1/4) lambda_k,
// i.e. the same power-law family with
//   A -> (1 + 4 tau^2)^(-3/2) A,    B -> (1 + 4 tau^2)^(1/2) B.
// Mode-independent energy shifts drop out of every correlator.

#pragma once

#include <optional>

#include "dephasing/spectral.hpp"

namespace dephasing::nonhermitian {

struct RenormalizedParams {
    double coupling;  // A (1+4 tau^2)^(-3/2)
    double cutoff;    // B (1+4 tau^2)^(1/2)
    double factor;    // 1 + 4 tau^2
};

RenormalizedParams renormalize(const BathSpec& bath);

/// The Hermitian bath with the renormalized coupling and cutoff.
BathSpec effective_bath(const BathSpec& bath);

/// Model whose bath is replaced by effective_bath(); bias and temperature kept.
ModelSpec effective_model(const ModelSpec& model);

/// Decoherence factor with non-Hermitian bath (T = 0).
double gamma_nh(const BathSpec& bath, double t);

/// exp(-gamma_nh), zero bias.
double p_x_nh(const BathSpec& bath, double t);

struct TauDerivative {
    double value;  // central difference in tau
    double step;
    // Ohmic-only leading asymptotes, for comparison:
    //   Bt << 1: 2 tau A~ (B~ t)^2 / (1 + 4 tau^2)
    //   Bt >> 1: 12 tau A~ (B~ t)^(-A~) ln(B~ t) / (1 + 4 tau^2)
    std::optional<double> short_time_asymptote;
    std::optional<double> long_time_asymptote;
};

/// dP_x/dtau by a central difference with step max(1e-6, 1e-6 tau). P_x
/// depends on tau^2 only, so the lower point is reflected to |tau - h| and
/// the derivative vanishes identically at tau = 0.
TauDerivative dp_dtau(const BathSpec& bath, double t);

}  // namespace dephasing::nonhermitian
