#include <array>
#include <cmath>
#include <fstream>
#include <ostream>

#include "dephasing/cli.hpp"
#include "dephasing/errors.hpp"
#include "dephasing/nonhermitian.hpp"
#include "dephasing/numerics.hpp"

namespace dephasing::cli {

namespace {

constexpr std::array kFig1Couplings{0.8, 1.0, 2.0};
constexpr std::array kFig34Exponents{1.0, 0.5, 2.5};
constexpr std::array kFig3Taus{0.0, 0.2, 0.4, 0.6, 1.0, 2.0};
constexpr std::array kFig4Times{0.1, 0.3, 1.0, 3.0, 10.0, 30.0, 100.0};

struct Fig2Panel {
    const char* name;
    std::vector<double> exponents;
};

// Short-time panel, then the long-time panels: non-integer super-Ohmic,
// integer super-Ohmic, sub-Ohmic.
const std::array<Fig2Panel, 4>& fig2_panels() {
    static const std::array<Fig2Panel, 4> panels{{
        {"a", {0.5, 1.5, 2.0, 2.5, 3.0}},
        {"b", {1.5, 2.5}},
        {"c", {2.0, 3.0}},
        {"d", {0.3, 0.5, 0.7}},
    }};
    return panels;
}

analytic::TimeGrid short_grid() { return analytic::TimeGrid::linear(0.0, 1.0, 101); }
analytic::TimeGrid long_grid() { return analytic::TimeGrid::log(1e-2, 1e4, 121); }

void fig1(std::ostream& out) {
    out << "panel,A,t,P_x,C_x,abs_C_x\n";
    auto emit = [&](const char* panel, double a, const analytic::TimeGrid& grid) {
        const auto series = analytic::evaluate_series(ModelSpec(BathSpec(1.0, a, 1.0)), grid);
        for (const auto& p : series.points)
            out << panel << ',' << format_number(a) << ',' << format_number(p.t) << ',' << format_number(p.p_x)
                << ',' << format_number(p.c_x) << ',' << format_number(std::abs(p.c_x)) << '\n';
    };
    for (double a : kFig1Couplings) emit("a", a, short_grid());
    emit("b", 0.8, long_grid());
    emit("c", 1.0, long_grid());
    emit("d", 2.0, long_grid());
}

// ln(P_x / P_0) = A Gamma(s-1) (1+x^2)^((1-s)/2) cos((s-1) atan x), written
// out directly so the late-time remainder keeps its relative precision.
double log_p_over_plateau(double s, double a, double x) {
    return a * numerics::gamma_fn(s - 1.0) * std::exp(0.5 * (1.0 - s) * numerics::stable_log1p_sq(x)) *
           std::cos((s - 1.0) * std::atan(x));
}

void fig2(std::ostream& out) {
    out << "panel,s,t,P_x,C_x,abs_C_x,abs_ln_P_over_P0,abs_ln_abs_C_over_P0\n";
    for (const auto& panel : fig2_panels()) {
        const auto grid = panel.name[0] == 'a' ? short_grid() : long_grid();
        for (double s : panel.exponents) {
            const auto series = analytic::evaluate_series(ModelSpec(BathSpec(s, 1.0, 1.0)), grid);
            for (const auto& p : series.points) {
                const double lp = log_p_over_plateau(s, 1.0, p.t);
                const double lc = lp + std::log(std::abs(p.phi));
                out << panel.name << ',' << format_number(s) << ',' << format_number(p.t) << ','
                    << format_number(p.p_x) << ',' << format_number(p.c_x) << ',' << format_number(std::abs(p.c_x))
                    << ',' << format_number(std::abs(lp)) << ',' << format_number(std::abs(lc)) << '\n';
            }
        }
    }
}

void fig3(std::ostream& out, const std::vector<double>& taus) {
    // 101 points over five decades put t = 1 exactly on the grid.
    const auto grid = analytic::TimeGrid::log(1e-2, 1e3, 101);
    out << "s,tau,t,P_x\n";
    for (double s : kFig34Exponents)
        for (double tau : taus) {
            const BathSpec bath(s, 1.0, 1.0, tau);
            for (double t : grid.times())
                out << format_number(s) << ',' << format_number(tau) << ',' << format_number(t) << ','
                    << format_number(nonhermitian::p_x_nh(bath, t)) << '\n';
        }
}

void fig4(std::ostream& out) {
    constexpr int kTauPoints = 41;
    out << "s,t,tau,P_x\n";
    for (double s : kFig34Exponents)
        for (double t : kFig4Times)
            for (int i = 0; i < kTauPoints; ++i) {
                const double tau = 2.0 * i / (kTauPoints - 1);
                out << format_number(s) << ',' << format_number(t) << ',' << format_number(tau) << ','
                    << format_number(nonhermitian::p_x_nh(BathSpec(s, 1.0, 1.0, tau), t)) << '\n';
            }
}

}  // namespace

void write_figure(int figure_id, std::ostream& out, const std::vector<double>& tau_list) {
    switch (figure_id) {
        case 1: return fig1(out);
        case 2: return fig2(out);
        case 3:
            return fig3(out, tau_list.empty() ? std::vector<double>(kFig3Taus.begin(), kFig3Taus.end()) : tau_list);
        case 4: return fig4(out);
        default: throw DomainError("unknown figure id " + std::to_string(figure_id) + " (expected 1..4)");
    }
}

std::filesystem::path cmd_fig(int figure_id, const std::filesystem::path& dir,
                              const std::vector<double>& tau_list) {
    if (figure_id < 1 || figure_id > 4)
        throw DomainError("unknown figure id " + std::to_string(figure_id) + " (expected 1..4)");
    std::filesystem::create_directories(dir);
    const auto path = dir / ("fig" + std::to_string(figure_id) + ".csv");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_figure(figure_id, out, tau_list);
    if (!out) throw std::runtime_error("write failed: " + path.string());
    return path;
}

}  // namespace dephasing::cli
