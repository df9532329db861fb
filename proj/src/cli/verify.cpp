#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <utility>

#include "dephasing/asymptotics.hpp"
#include "dephasing/cli.hpp"
#include "dephasing/errors.hpp"
#include "dephasing/nonhermitian.hpp"
#include "dephasing/numerics.hpp"
#include "dephasing/oracle.hpp"
#include "dephasing/parallel.hpp"

namespace dephasing::cli {

namespace {

using asymptotics::Column;

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Recorder {
    double scale;
    std::vector<CheckResult> results;

    void add(std::string name, double residual, double tolerance) {
        const bool pass = std::isfinite(residual) && residual <= tolerance * scale;
        results.push_back({std::move(name), pass, residual, tolerance});
    }
};

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

double ulps(double a, double b) {
    if (a == b) return 0.0;
    const double m = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) / (std::nextafter(m, kInf) - m);
}

std::vector<double> logspace(double lo, double hi, std::size_t n) {
    const auto g = analytic::TimeGrid::log(lo, hi, n);
    return {g.times().begin(), g.times().end()};
}

// Any exception counts as an unbounded residual.
template <typename F>
double guarded(F&& f) {
    try {
        return f();
    } catch (const std::exception&) {
        return kInf;
    }
}

void check_gamma(Recorder& rec, const std::function<double(double)>& gamma) {
    rec.add("gamma_recurrence", guarded([&] {
                std::mt19937_64 rng(20240611);
                std::uniform_real_distribution<double> dist(-9.5, 29.0);
                double worst = 0.0;
                for (int n = 0; n < 1000;) {
                    const double x = dist(rng);
                    if (x < 0.5 && std::abs(x - std::round(x)) < 1e-2) continue;
                    const double next = gamma(x + 1.0);
                    worst = std::max(worst, std::abs(next - x * gamma(x)) / std::abs(next));
                    ++n;
                }
                return worst;
            }),
            1e-12);

    static constexpr double kReference[][2] = {
        {1.5, 0.88622692545275801365},     {-0.5, -3.5449077018110320546},
        {0.3, 2.9915689876875906283},      {2.7, 1.544685845850593765},
        {-3.7, 0.25164399590242264351},    {-9.5, 2.7721279115751021321e-6},
        {29.5, 1.6348125198274266444e30},  {0.001, 999.42377248459546611},
        {7.25, 1155.3810139199896872},     {-0.999999, -1000000.4227569912748},
    };
    rec.add("gamma_reference", guarded([&] {
                double worst = 0.0;
                for (const auto& [x, want] : kReference) worst = std::max(worst, rel(gamma(x), want));
                return worst;
            }),
            1e-13);
}

void check_quadrature(Recorder& rec) {
    rec.add("quadrature_gamma_integrals", guarded([] {
                double worst = 0.0;
                for (double a : {0.3, 0.5, 1.0, 2.7, 5.0}) {
                    const auto r = numerics::integrate_semi_infinite(
                        [a](double w) { return std::pow(w, a - 1.0) * std::exp(-w); });
                    worst = std::max(worst, rel(r.value, numerics::gamma_fn(a)));
                }
                return worst;
            }),
            1e-9);
}

void check_oracles(Recorder& rec) {
    constexpr double kExponents[] = {0.3, 0.5, 0.9, 1.0, 1.1, 1.5, 2.0, 2.5, 3.0};
    constexpr double kCouplings[] = {0.5, 1.0, 2.0};
    const auto times = logspace(1e-3, 1e2, 40);
    std::vector<double> quad(std::size(kExponents) * std::size(kCouplings));
    std::vector<double> modes(quad.size());
    parallel_for(quad.size(), [&](std::size_t k) {
        const BathSpec bath(kExponents[k / 3], kCouplings[k % 3], 1.0);
        const ModelSpec model(bath);
        const auto db = oracle::DiscreteBath::sample(bath, 10000, oracle::Sampling::LogFreq);
        double wq = 0.0, wm = 0.0;
        for (double t : times) {
            const double g = analytic::gamma_closed(bath, t);
            const double i = analytic::phase_integral_closed(bath, t);
            wq = std::max({wq, std::abs(oracle::gamma_quadrature(model, t) - g) / (1 + std::abs(g)),
                           std::abs(oracle::phase_quadrature(bath, t) - i) / (1 + std::abs(i))});
            const auto m = oracle::gamma_mode_sum(db, t);
            wm = std::max({wm, std::abs(m.gamma - g) / (1 + std::abs(g)), std::abs(m.phase - i) / (1 + std::abs(i))});
        }
        quad[k] = wq;
        modes[k] = wm;
    });
    rec.add("oracle_quadrature", *std::max_element(quad.begin(), quad.end()), 1e-8);
    rec.add("oracle_mode_sum", *std::max_element(modes.begin(), modes.end()), 2e-3);

    rec.add("mode_sum_recurrence", guarded([] {
                const auto db = oracle::DiscreteBath::sample(BathSpec(1.5, 1.0, 1.0), 200, oracle::Sampling::LinearFreq);
                double worst = 0.0;
                for (double t : {0.3, 1.7, 4.0}) {
                    const double a = oracle::gamma_mode_sum(db, t).gamma;
                    const double b = oracle::gamma_mode_sum(db, t + db.recurrence_time()).gamma;
                    worst = std::max(worst, std::abs(a - b) / std::abs(a));
                }
                return worst;
            }),
            1e-9);
}

void check_closed_forms(Recorder& rec) {
    const auto mid = logspace(1e-2, 1e2, 41);
    rec.add("ohmic_limit_continuity", guarded([&] {
                double worst = 0.0;
                for (double a : {0.5, 1.0, 2.0})
                    for (double t : mid) {
                        const double g1 = analytic::gamma_closed(BathSpec(1.0, a, 1.0), t);
                        for (double s : {1.0 - 1e-7, 1.0 + 1e-7})
                            worst = std::max(worst, rel(analytic::gamma_closed(BathSpec(s, a, 1.0), t), g1));
                    }
                return worst;
            }),
            1e-5);

    rec.add("odd_coupling_identity_ulps", guarded([] {
                std::vector<double> grid = logspace(1e-3, 1e4, 701);
                const auto lin = analytic::TimeGrid::linear(0.0, 1.0, 101);
                grid.insert(grid.end(), lin.times().begin(), lin.times().end());
                const ModelSpec one(BathSpec(1.0, 1.0, 1.0)), two(BathSpec(1.0, 2.0, 1.0));
                double worst = 0.0;
                for (double t : grid) worst = std::max(worst, ulps(analytic::c_x(one, t), analytic::p_x(two, t)));
                return worst;
            }),
            4.0);

    rec.add("bias_symmetry", guarded([&] {
                double worst = 0.0;
                for (double s : {0.5, 1.0, 2.5})
                    for (double eps : {0.3, 1.7})
                        for (double t : mid) {
                            const BathSpec bath(s, 1.0, 1.0);
                            worst = std::max(worst, std::abs(analytic::c_x(ModelSpec(bath, eps), t) -
                                                             analytic::c_x(ModelSpec(bath, -eps), t)));
                        }
                return worst;
            }),
            0.0);

    rec.add("coupling_linearity", guarded([&] {
                double worst = 0.0;
                for (double s : {0.5, 1.0, 1.0 + 5e-7, 2.5})
                    for (double t : mid) {
                        const double g = analytic::gamma_closed(BathSpec(s, 0.7, 1.0), t);
                        worst = std::max(worst, rel(analytic::gamma_closed(BathSpec(s, 1.4, 1.0), t), 2.0 * g));
                    }
                return worst;
            }),
            0.0);
}

void check_long_time(Recorder& rec) {
    rec.add("plateau_value", guarded([] {
                // The approach to the plateau is relative Gamma(s-1) x^(1-s), which
                // at s = 1.5 is still ~1e-5 at x = 1e10; that case is taken further out.
                double worst = 0.0;
                for (auto [s, x] : {std::pair{1.5, 1e14}, {2.0, 1e10}, {2.5, 1e10}, {3.0, 1e10}}) {
                    const ModelSpec m(BathSpec(s, 1.0, 1.0));
                    worst = std::max(worst, rel(analytic::p_x(m, x), asymptotics::long_time_p(m).plateau));
                }
                return worst;
            }),
            1e-6);

    rec.add("subohmic_rate", guarded([] {
                // -ln P_x = A Gamma(s-1) + alpha_1 x^(1-s) + ...; the raw ratio
                // carries the constant as a relative offset of order x^(s-1).
                double worst = 0.0;
                for (double s : {0.3, 0.5}) {
                    const ModelSpec m(BathSpec(s, 1.0, 1.0));
                    const double x = 1e6;
                    // P_x itself underflows here; -ln P_x is gamma.
                    const double rate = analytic::gamma_closed(m.bath(), x) / std::pow(x, 1.0 - s);
                    worst = std::max(worst, rel(rate, asymptotics::long_time_p(m).amplitude));
                }
                return worst;
            }),
            1e-2);

    const auto late = analytic::TimeGrid::log(1e2, 1e4, 41);
    rec.add("ohmic_decay_exponent", guarded([&] {
                double worst = 0.0;
                for (double a : {0.8, 1.0, 2.0}) {
                    const auto series = analytic::evaluate_series(ModelSpec(BathSpec(1.0, a, 1.0)), late);
                    const auto fit = asymptotics::fit_power_law(series, Column::Px, 1e2, 1e4, false);
                    worst = std::max(worst, std::abs(fit.exponent + a));
                }
                return worst;
            }),
            1e-2);

    rec.add("odd_coupling_anomaly", guarded([&] {
                double worst = 0.0;
                for (double a : {1.0, 2.0}) {
                    const auto series = analytic::evaluate_series(ModelSpec(BathSpec(1.0, a, 1.0)), late);
                    const auto fit = asymptotics::fit_power_law(series, Column::Cx, 1e2, 1e4, false);
                    worst = std::max(worst, std::abs(fit.exponent + 2.0));
                    if (a == 2.0) worst = std::max(worst, std::abs(fit.amplitude + 1.0));
                }
                return worst;
            }),
            2e-2);

    rec.add("plateau_approach_exponent", guarded([&] {
                double worst = 0.0;
                for (double s : {1.5, 2.0, 2.5, 3.0}) {
                    const auto series = analytic::evaluate_series(ModelSpec(BathSpec(s, 1.0, 1.0)), late);
                    const auto fit = asymptotics::fit_power_law(series, Column::Px, 1e2, 1e4, true);
                    const double want = s == 2.0 ? -s : 1.0 - s;
                    worst = std::max(worst, std::abs(fit.exponent - want));
                }
                return worst;
            }),
            2e-2);

    rec.add("short_time_coefficients", guarded([] {
                const auto early = analytic::TimeGrid::log(1e-4, 1e-2, 41);
                double worst = 0.0;
                for (double a : {0.8, 1.0, 2.0}) {
                    const auto series = analytic::evaluate_series(ModelSpec(BathSpec(1.0, a, 1.0)), early);
                    worst = std::max(
                        {worst, rel(asymptotics::fit_quadratic_coefficient(series, Column::Px, 1e-4, 1e-2), a / 2),
                         rel(asymptotics::fit_quadratic_coefficient(series, Column::Cx, 1e-4, 1e-2),
                             a * (1 + a) / 2)});
                }
                return worst;
            }),
            5e-3);

    rec.add("crossover_location", guarded([] {
                const double a = 0.8;
                const auto series = analytic::evaluate_series(ModelSpec(BathSpec(1.0, a, 1.0)),
                                                              analytic::TimeGrid::log(10.0, 1e4, 61));
                std::vector<double> x(series.grid.times().begin(), series.grid.times().end()), y;
                for (const auto& p : series.points) y.push_back(p.c_x);
                const double found = asymptotics::locate_crossover(x, y, -a - 1.0, -a);
                const double want = asymptotics::crossover_time(series.model, asymptotics::CrossoverFamily::OhmicOddA);
                return std::abs(std::log(found / want));
            }),
            std::numbers::ln2);

    rec.add("crossover_sentinel", guarded([] {
                using asymptotics::CrossoverFamily;
                const bool ok =
                    std::isinf(asymptotics::crossover_time(ModelSpec(BathSpec(1.0, 1.0, 1.0)), CrossoverFamily::OhmicOddA)) &&
                    std::isinf(asymptotics::crossover_time(ModelSpec(BathSpec(2.0, 1.0, 1.0)), CrossoverFamily::EvenS_P)) &&
                    std::isinf(asymptotics::crossover_time(ModelSpec(BathSpec(3.0, 1.0, 1.0)), CrossoverFamily::OddS_phi));
                return ok ? 0.0 : 1.0;
            }),
            0.0);
}

void check_nonhermitian(Recorder& rec) {
    constexpr double kTimes[] = {0.1, 0.3, 1.0, 3.0, 10.0, 30.0, 100.0};
    rec.add("nonhermitian_reduction", guarded([&] {
                double worst = 0.0;
                for (double s : {0.5, 1.0, 2.5})
                    for (double tau : {0.1, 0.5, 1.3})
                        for (double t : kTimes) {
                            const BathSpec bath(s, 1.0, 1.0, tau);
                            const auto eff = nonhermitian::renormalize(bath);
                            const double want = analytic::p_x(ModelSpec(BathSpec(s, eff.coupling, eff.cutoff)), t);
                            worst = std::max(worst, std::abs(nonhermitian::p_x_nh(bath, t) - want));
                        }
                return worst;
            }),
            0.0);

    rec.add("nonhermitian_product_invariant", guarded([] {
                double worst = 0.0;
                for (double tau : {0.1, 0.5, 1.0, 2.0, 7.5}) {
                    const auto eff = nonhermitian::renormalize(BathSpec(1.0, 1.3, 0.7, tau));
                    worst = std::max(worst, rel(eff.coupling * std::pow(eff.cutoff, 3), 1.3 * std::pow(0.7, 3)));
                }
                return worst;
            }),
            8.0 * std::numeric_limits<double>::epsilon());

    rec.add("tau_monotonicity", guarded([&] {
                double worst = 0.0;
                for (double s : {0.5, 1.0, 2.5})
                    for (double a : {0.5, 1.0, 2.0})
                        for (double t : kTimes) {
                            double prev = nonhermitian::p_x_nh(BathSpec(s, a, 1.0, 0.0), t);
                            for (int i = 1; i <= 40; ++i) {
                                const double p = nonhermitian::p_x_nh(BathSpec(s, a, 1.0, 2.0 * i / 40), t);
                                worst = std::max(worst, prev - p);
                                prev = p;
                            }
                        }
                return worst;
            }),
            1e-12);

    rec.add("tau_derivative_sign", guarded([&] {
                double worst = 0.0;
                for (double s : {0.5, 1.0, 2.5})
                    for (double a : {0.5, 1.0, 2.0})
                        for (double t : kTimes)
                            for (int i = 0; i <= 40; ++i)
                                worst = std::max(
                                    worst, -nonhermitian::dp_dtau(BathSpec(s, a, 1.0, 2.0 * i / 40), t).value);
                return worst;
            }),
            1e-10);

    rec.add("tau_derivative_short_time", guarded([] {
                const auto d = nonhermitian::dp_dtau(BathSpec(1.0, 1.0, 1.0, 0.5), 1e-2);
                return rel(*d.short_time_asymptote, d.value);
            }),
            5e-2);

    // The log-enhanced long-time form is leading order only; corrections fall
    // off like 1/ln(Bt), so it is checked deep in the asymptotic range.
    rec.add("tau_derivative_long_time", guarded([] {
                const auto d = nonhermitian::dp_dtau(BathSpec(1.0, 1.0, 1.0, 0.5), 1e6);
                return rel(*d.long_time_asymptote, d.value);
            }),
            5e-2);

    rec.add("bogoliubov_modes", guarded([] {
                double worst = 0.0;
                for (double tau : {0.0, 0.3, 1.0, 2.0}) {
                    const double f = 1 + 4 * tau * tau;
                    for (double w : {1e-3, 0.5, 1.0, 7.0}) {
                        const auto m = oracle::bogoliubov_mode(w, 0.2, tau);
                        worst = std::max({worst, rel(m.frequency, w * std::sqrt(f)),
                                          rel(m.coupling, 0.2 * std::pow(f, -0.25)),
                                          std::abs(m.v * m.v - m.u * m.u - 1.0)});
                    }
                }
                return worst;
            }),
            1e-12);
}

void check_finite_temperature(Recorder& rec) {
    rec.add("finite_temperature_limit", guarded([] {
                double worst = 0.0;
                for (double eps : {0.0, 0.5})
                    for (double t : {0.5, 1.0, 2.0, 5.0}) {
                        const ModelSpec cold(BathSpec(2.5, 1.0, 1.0), eps, 1e-6);
                        worst = std::max(worst, std::abs(oracle::c_x_finite_T(cold, t) -
                                                         analytic::c_x(ModelSpec(BathSpec(2.5, 1.0, 1.0), eps), t)));
                    }
                return worst;
            }),
            1e-4);

    rec.add("finite_temperature_divergence", [] {
        int raised = 0;
        for (double s : {0.5, 1.0}) {
            try {
                oracle::gamma_quadrature(ModelSpec(BathSpec(s, 1.0, 1.0), 0.0, 0.1), 1.0);
            } catch (const DivergenceError&) {
                ++raised;
            } catch (const std::exception&) {
            }
        }
        return raised == 2 ? 0.0 : 1.0;
    }(), 0.0);

    rec.add("density_matrix", guarded([] {
                double worst = 0.0;
                const auto rho0 = oracle::plus_x_state();
                for (double s : {0.5, 1.0, 2.5})
                    for (double t : {0.3, 2.0, 20.0}) {
                        const ModelSpec m(BathSpec(s, 1.0, 1.0), 0.4);
                        const auto rho = oracle::reduced_density_matrix(m, t, rho0);
                        worst = std::max({worst, std::abs(oracle::p_x_density_matrix(m, t) - analytic::p_x(m, t)),
                                          (rho - rho.adjoint()).cwiseAbs().maxCoeff(),
                                          std::abs(rho.trace() - 1.0)});
                    }
                return worst;
            }),
            1e-8);
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    if (!(options.tolerance_scale > 0.0)) throw DomainError("tolerance scale must be positive");
    Recorder rec{options.tolerance_scale, {}};
    check_gamma(rec, options.gamma ? options.gamma : std::function<double(double)>(numerics::gamma_fn));
    check_quadrature(rec);
    check_oracles(rec);
    check_closed_forms(rec);
    check_long_time(rec);
    check_nonhermitian(rec);
    check_finite_temperature(rec);
    return std::move(rec.results);
}

int cmd_verify(const VerifyOptions& options, std::ostream& out) {
    bool all = true;
    for (const auto& r : run_verification(options)) {
        out << "CHECK " << r.name << ' ' << (r.pass ? "pass" : "fail") << ' ' << format_number(r.max_residual)
            << '\n';
        all = all && r.pass;
    }
    return all ? 0 : 1;
}

}  // namespace dephasing::cli
