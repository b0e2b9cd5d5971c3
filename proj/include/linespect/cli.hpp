#ifndef LINESPECT_CLI_HPP
#define LINESPECT_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace linespect {

/// Parsed command-line invocation. Commands:
///   spectrum  closed-form vs eigensolver spectrum table
///   perturb   first-order prediction vs actual perturbed spectrum
///   sweep     second-order error E over an epsilon range
///   track     eigenvector continuation over an epsilon range
///   validate  cross-identity suite
struct RunConfig {
    enum class Command { spectrum, perturb, sweep, track, validate };
    enum class Format { csv, json, svg };

    Command command = Command::spectrum;
    int n = 0;
    std::optional<int> m1;
    std::optional<int> m2;
    std::optional<double> epsilon;
    std::optional<double> eps_min;
    std::optional<double> eps_max;
    std::optional<int> steps;
    int max_n = 64;            // validate: size cap
    std::vector<int> k_list;   // track SVG: eigenvector indices to draw
    std::string output_path = "-";
    Format format = Format::csv;
};

/// Executes one command. Data goes to config.output_path ("-" = stdout),
/// warnings to diag. Returns the process exit status: 0 on success, 2 on a
/// numerical/identity failure. Configuration errors throw
/// std::invalid_argument (mapped to exit 1 by the binary); numerical
/// errors from the solver propagate as std::runtime_error (mapped to 2).
int run_command(const RunConfig& config, std::ostream& diag);

} // namespace linespect

#endif
