#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "dephasing/cli.hpp"

namespace dephasing::cli {

namespace {

constexpr const char* kSchemaHelp = R"(Output (CSV, comma separated, LF, header row, %.17g numbers):
  eval   t,gamma,P_x,phi,C_x,source
  scan   s,A,B,eps,tau,t,gamma,P_x,phi,C_x,source
  fig 1  panel,A,t,P_x,C_x,abs_C_x
  fig 2  panel,s,t,P_x,C_x,abs_C_x,abs_ln_P_over_P0,abs_ln_abs_C_over_P0
  fig 3  s,tau,t,P_x
  fig 4  s,t,tau,P_x
  verify one line per check: CHECK <name> <pass|fail> <max_residual>
Config file (--config): flat `key = value` lines using the flag names; flags win.
Model options accept comma-separated lists for scan.)";

template <typename F>
void with_output(const std::string& path, std::ostream& out, F&& write) {
    if (path == "-") {
        write(out);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + path + " for writing");
    write(file);
    if (!file) throw std::runtime_error("write failed: " + path);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pure-dephasing qubit correlators: closed forms, scans, figure data and self-checks."};
    app.footer(kSchemaHelp);
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a key = value file");

    RunConfig cfg;
    auto list = [&](const char* name, std::vector<double>& target, const char* help) {
        return app.add_option(name, target, help)->delimiter(',')->capture_default_str();
    };
    list("--s", cfg.exponent, "Spectral exponent s > 0");
    list("--A", cfg.coupling, "Coupling strength A >= 0");
    list("--B", cfg.cutoff, "Cutoff frequency B > 0");
    list("--eps", cfg.bias, "Qubit bias");
    auto* tau = list("--tau", cfg.tau, "Non-Hermiticity tau >= 0 (also the tau list of fig 3)");
    app.add_option("--tmin", cfg.grid.t_min, "First sample time")->capture_default_str();
    app.add_option("--tmax", cfg.grid.t_max, "Last sample time")->capture_default_str();
    app.add_option("--points", cfg.grid.points, "Number of sample times (>= 2)")->capture_default_str();
    app.add_flag("--log", cfg.grid.log_spacing, "Log-spaced times (needs tmin > 0)");
    app.add_option("--out", cfg.output_path, "Output file, - for stdout")->capture_default_str();

    auto* eval = app.add_subcommand("eval", "Closed-form correlators on a time grid")->fallthrough();
    auto* scan = app.add_subcommand("scan", "Cartesian scan over comma-separated parameter lists")->fallthrough();
    auto* fig = app.add_subcommand("fig", "Write the data behind figure 1..4 as fig<id>.csv")->fallthrough();
    fig->add_option("--id", cfg.figure_id, "Figure number 1..4")->required();
    fig->add_option("--outdir", cfg.output_dir, "Directory for the CSV")->capture_default_str();
    auto* verify = app.add_subcommand("verify", "Run the self-checks; exit 0 iff all pass")->fallthrough();
    verify->add_option("--tol-scale", cfg.tolerance_scale, "Multiply every tolerance by this factor")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return e.get_exit_code() != 0 ? e.get_exit_code() : 2;
    }

    cfg.tau_given = tau->count() > 0;

    try {
        if (*eval) {
            with_output(cfg.output_path, out, [&](std::ostream& o) { cmd_eval(cfg, o); });
        } else if (*scan) {
            with_output(cfg.output_path, out, [&](std::ostream& o) { cmd_scan(cfg, o); });
        } else if (*fig) {
            out << cmd_fig(cfg.figure_id, cfg.output_dir, cfg.tau_given ? cfg.tau : std::vector<double>{}).string() << '\n';
        } else if (*verify) {
            int status = 1;
            with_output(cfg.output_path, out,
                        [&](std::ostream& o) { status = cmd_verify({cfg.tolerance_scale, nullptr}, o); });
            return status;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace dephasing::cli
