#include <ostream>

#include "dephasing/cli.hpp"
#include "dephasing/errors.hpp"
#include "dephasing/nonhermitian.hpp"

namespace dephasing::cli {

analytic::CorrelatorSeries evaluate_model(const ModelSpec& model, const analytic::TimeGrid& grid) {
    if (model.bath().is_hermitian()) return analytic::evaluate_series(model, grid);
    auto series = analytic::evaluate_series(nonhermitian::effective_model(model), grid);
    series.model = model;
    return series;
}

namespace {

void write_row(std::ostream& out, const analytic::CorrelatorPoint& p, analytic::Source source) {
    out << format_number(p.t) << ',' << format_number(p.gamma) << ',' << format_number(p.p_x) << ','
        << format_number(p.phi) << ',' << format_number(p.c_x) << ',' << analytic::to_string(source) << '\n';
}

double single(const std::vector<double>& values, const char* name) {
    if (values.size() != 1)
        throw DomainError(std::string("eval takes exactly one value for --") + name + "; use scan for lists");
    return values.front();
}

}  // namespace

void cmd_eval(const RunConfig& cfg, std::ostream& out) {
    const BathSpec bath(single(cfg.exponent, "s"), single(cfg.coupling, "A"), single(cfg.cutoff, "B"),
                        single(cfg.tau, "tau"));
    const ModelSpec model(bath, single(cfg.bias, "eps"));
    const auto series = evaluate_model(model, cfg.grid.build());
    out << "t,gamma,P_x,phi,C_x,source\n";
    for (const auto& p : series.points) write_row(out, p, series.source);
}

void cmd_scan(const RunConfig& cfg, std::ostream& out) {
    const auto grid = cfg.grid.build();
    out << "s,A,B,eps,tau,t,gamma,P_x,phi,C_x,source\n";
    // Rows appear in nested-loop order of the parameter lists, then grid order.
    for (double s : cfg.exponent)
        for (double a : cfg.coupling)
            for (double b : cfg.cutoff)
                for (double eps : cfg.bias)
                    for (double tau : cfg.tau) {
                        const ModelSpec model(BathSpec(s, a, b, tau), eps);
                        const auto series = evaluate_model(model, grid);
                        const std::string prefix = format_number(s) + ',' + format_number(a) + ',' +
                                                   format_number(b) + ',' + format_number(eps) + ',' +
                                                   format_number(tau) + ',';
                        for (const auto& p : series.points) {
                            out << prefix;
                            write_row(out, p, series.source);
                        }
                    }
}

}  // namespace dephasing::cli
