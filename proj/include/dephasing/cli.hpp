// cli.hpp: the command surface behind the `dephasing` executable.
//
// CSV schemas (comma separated, LF line ends, one header row):
//   eval  t,gamma,P_x,phi,C_x,source
//   scan  s,A,B,eps,tau,t,gamma,P_x,phi,C_x,source
//   fig 1 panel,A,t,P_x,C_x,abs_C_x
//   fig 2 panel,s,t,P_x,C_x,abs_C_x,abs_ln_P_over_P0,abs_ln_abs_C_over_P0
//   fig 3 s,tau,t,P_x
//   fig 4 s,t,tau,P_x
// Numbers are printed with 17 significant digits (%.17g), which round-trips.

#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "dephasing/analytic.hpp"
#include "dephasing/spectral.hpp"

namespace dephasing::cli {

/// 17-significant-digit decimal form of v, independent of the C locale.
std::string format_number(double v);

struct GridSpec {
    double t_min = 0.0;
    double t_max = 10.0;
    std::size_t points = 101;
    bool log_spacing = false;

    analytic::TimeGrid build() const;
};

enum class Command { Eval, Scan, Fig, Verify };

/// Parsed command line (and optional config file). Parameter lists have one
/// entry for eval and any number for scan.
struct RunConfig {
    Command command = Command::Eval;
    std::vector<double> exponent{1.0};
    std::vector<double> coupling{1.0};
    std::vector<double> cutoff{1.0};
    std::vector<double> bias{0.0};
    std::vector<double> tau{0.0};
    bool tau_given = false;  // --tau set explicitly (figure 3 uses it as its tau list)
    GridSpec grid;
    std::string output_path = "-";  // "-" is stdout
    int figure_id = 0;
    std::filesystem::path output_dir = ".";
    double tolerance_scale = 1.0;
};

/// Closed-form series; a non-Hermitian bath is evaluated through its renormalized parameters.
analytic::CorrelatorSeries evaluate_model(const ModelSpec& model, const analytic::TimeGrid& grid);

void cmd_eval(const RunConfig& cfg, std::ostream& out);
void cmd_scan(const RunConfig& cfg, std::ostream& out);

/// Writes fig<id>.csv into dir and returns its path. DomainError for unknown ids.
/// A non-empty tau_list replaces the default tau set of figure 3.
std::filesystem::path cmd_fig(int figure_id, const std::filesystem::path& dir,
                              const std::vector<double>& tau_list = {});
void write_figure(int figure_id, std::ostream& out, const std::vector<double>& tau_list = {});

struct CheckResult {
    std::string name;
    bool pass = false;
    double max_residual = 0.0;
    double tolerance = 0.0;
};

struct VerifyOptions {
    double tolerance_scale = 1.0;
    // Gamma implementation under test; swapped by negative-control fixtures.
    std::function<double(double)> gamma = nullptr;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options);

/// Prints one `CHECK <name> <pass|fail> <max_residual>` line per check.
/// Returns 0 iff every check passed.
int cmd_verify(const VerifyOptions& options, std::ostream& out);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dephasing::cli
