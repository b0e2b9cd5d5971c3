#include "linespect/cli.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "linespect/analysis.hpp"
#include "linespect/eigensolver.hpp"
#include "linespect/graph.hpp"
#include "linespect/io.hpp"
#include "linespect/spectrum.hpp"
#include "linespect/svg.hpp"
#include "linespect/validation.hpp"

namespace linespect {

namespace {

using nlohmann::ordered_json;
using io::format_double;

constexpr double kSpectrumAgreementTol = 1e-9;
const char* const kOrdering = "eq14-descending";

void require(bool cond, const std::string& msg) {
    if (!cond)
        throw std::invalid_argument(msg);
}

void require_n(const RunConfig& c) {
    require(c.n >= 2, "option --n is required and must be >= 2");
}

std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> v(count);
    for (int i = 0; i < count; ++i)
        v[i] = lo + (hi - lo) * i / (count - 1);
    return v;
}

std::string render_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
    io::CsvTable t;
    t.header = header;
    t.rows = rows;
    return t.to_string();
}

int cmd_spectrum(const RunConfig& c, std::ostream& diag) {
    require_n(c);
    const int n = c.n;
    const ClosedFormSpectrum spec = closed_form_spectrum(LineGraphSpec::canonical(n));
    const EigenDecomposition d = eig_symmetric(build_laplacian(LineGraphSpec::canonical(n)));

    double max_diff = 0.0;
    std::vector<std::vector<std::string>> rows;
    ordered_json jrows = ordered_json::array();
    svg::Series closed{"closed form", svg::palette_color(0), false, true, {}};
    svg::Series oracle{"eigensolver", svg::palette_color(1), false, true, {}};
    for (int k = 1; k <= n; ++k) {
        const SpectrumEntry& e = spec.entries[k - 1];
        const double lam_oracle = d.eigenvalues[n - k];
        const double diff = std::abs(e.lambda - lam_oracle);
        max_diff = std::max(max_diff, diff);
        rows.push_back({std::to_string(k), format_double(e.theta), format_double(e.lambda),
                        format_double(lam_oracle), format_double(diff)});
        jrows.push_back({{"k", k},
                         {"theta_k", e.theta},
                         {"lambda_closed_form", e.lambda},
                         {"lambda_oracle", lam_oracle},
                         {"abs_diff", diff}});
        closed.points.emplace_back(k, e.lambda);
        oracle.points.emplace_back(k, lam_oracle);
    }

    switch (c.format) {
    case RunConfig::Format::csv:
        io::write_text(c.output_path,
                       render_csv({"k", "theta_k", "lambda_closed_form", "lambda_oracle",
                                   "abs_diff"},
                                  rows));
        break;
    case RunConfig::Format::json: {
        ordered_json j{{"command", "spectrum"},
                       {"n", n},
                       {"ordering", kOrdering},
                       {"rows", jrows},
                       {"max_abs_diff", max_diff}};
        io::write_text(c.output_path, j.dump(2) + "\n");
        break;
    }
    case RunConfig::Format::svg: {
        svg::Plot plot("Line graph Laplacian spectrum, n = " + std::to_string(n),
                       "eigenvalue index k", "eigenvalue");
        plot.add_series(closed);
        plot.add_series(oracle);
        io::write_text(c.output_path, plot.render());
        break;
    }
    }

    if (max_diff > kSpectrumAgreementTol) {
        diag << "spectrum: closed form and eigensolver disagree, max |diff| = " << max_diff
             << "\n";
        return 2;
    }
    return 0;
}

int cmd_perturb(const RunConfig& c, std::ostream& diag) {
    require_n(c);
    require(c.m1.has_value() && c.m2.has_value(), "options --m1 and --m2 are required");
    require(c.epsilon.has_value(), "option --epsilon is required");
    const int n = c.n;
    const double eps = *c.epsilon;
    const LineGraphSpec graph = LineGraphSpec::canonical(n);
    const PerturbationSpec pert(*c.m1, *c.m2, eps);

    const std::vector<PerturbedPrediction> preds = predict_spectrum(graph, pert);
    const EigenDecomposition d = eig_symmetric(build_perturbed_laplacian(graph, pert));
    if (!is_simple_spectrum(d, 1e-9))
        diag << "perturb: warning: perturbed spectrum has a gap below 1e-9\n";

    std::vector<std::vector<std::string>> rows;
    ordered_json jrows = ordered_json::array();
    svg::Series unpert{"unperturbed", svg::palette_color(0), false, true, {}};
    svg::Series predicted{"predicted", svg::palette_color(2), false, true, {}};
    svg::Series oracle{"perturbed (eigensolver)", svg::palette_color(1), false, true, {}};
    for (int k = 1; k <= n; ++k) {
        const PerturbedPrediction& p = preds[k - 1];
        const double lam_oracle = d.eigenvalues[n - k];
        const double residual = lam_oracle - p.predicted;
        std::string res_over;
        ordered_json jres_over;
        if (eps != 0.0) {
            res_over = format_double(residual / (eps * eps));
            jres_over = residual / (eps * eps);
        }
        rows.push_back({std::to_string(k), format_double(p.lambda0),
                        format_double(p.lambda_prime), format_double(p.predicted),
                        format_double(lam_oracle), format_double(residual), res_over});
        jrows.push_back({{"k", k},
                         {"lambda0", p.lambda0},
                         {"lambda_prime", p.lambda_prime},
                         {"predicted", p.predicted},
                         {"oracle", lam_oracle},
                         {"residual", residual},
                         {"residual_over_eps2", jres_over}});
        unpert.points.emplace_back(k, p.lambda0);
        predicted.points.emplace_back(k, p.predicted);
        oracle.points.emplace_back(k, lam_oracle);
    }

    switch (c.format) {
    case RunConfig::Format::csv:
        io::write_text(c.output_path,
                       render_csv({"k", "lambda0", "lambda_prime", "predicted", "oracle",
                                   "residual", "residual_over_eps2"},
                                  rows));
        break;
    case RunConfig::Format::json: {
        ordered_json j{{"command", "perturb"},
                       {"n", n},
                       {"m1", pert.m1()},
                       {"m2", pert.m2()},
                       {"epsilon", eps},
                       {"ordering", kOrdering},
                       {"rows", jrows}};
        io::write_text(c.output_path, j.dump(2) + "\n");
        break;
    }
    case RunConfig::Format::svg: {
        svg::Plot plot("Perturbed spectrum, n = " + std::to_string(n) + ", edge (" +
                           std::to_string(pert.m1()) + "," + std::to_string(pert.m2()) +
                           "), eps = " + format_double(eps),
                       "eigenvalue index k", "eigenvalue");
        plot.add_series(unpert);
        plot.add_series(predicted);
        plot.add_series(oracle);
        io::write_text(c.output_path, plot.render());
        break;
    }
    }
    return 0;
}

int cmd_sweep(const RunConfig& c, std::ostream& diag) {
    require_n(c);
    require(c.m1.has_value() && c.m2.has_value(), "options --m1 and --m2 are required");
    require(c.eps_min.has_value() && c.eps_max.has_value() && c.steps.has_value(),
            "options --eps-min, --eps-max and --steps are required");
    require(*c.eps_min > 0.0, "sweep requires --eps-min > 0 (the error divides by eps^2)");
    require(*c.eps_min < *c.eps_max, "--eps-min must be smaller than --eps-max");
    require(*c.steps >= 2, "--steps must be >= 2");

    const int n = c.n;
    const ErrorStudyResult r = error_study(LineGraphSpec::canonical(n), *c.m1, *c.m2,
                                           linspace(*c.eps_min, *c.eps_max, *c.steps));
    for (int step : r.degenerate_steps)
        diag << "sweep: warning: spectrum at eps = " << r.epsilons[step]
             << " has a gap below 1e-9\n";

    std::vector<std::vector<std::string>> rows;
    ordered_json jrows = ordered_json::array();
    std::vector<svg::Series> curves;
    for (int k = 1; k <= n; ++k)
        curves.push_back({"k=" + std::to_string(k), svg::palette_color(k - 1), true, true, {}});
    for (std::size_t step = 0; step < r.epsilons.size(); ++step) {
        for (int k = 1; k <= n; ++k) {
            const double e = r.errors[step][k - 1];
            rows.push_back(
                {format_double(r.epsilons[step]), std::to_string(k), format_double(e)});
            jrows.push_back({{"epsilon", r.epsilons[step]}, {"k", k}, {"E", e}});
            curves[k - 1].points.emplace_back(r.epsilons[step], e);
        }
    }

    switch (c.format) {
    case RunConfig::Format::csv:
        io::write_text(c.output_path, render_csv({"epsilon", "k", "E"}, rows));
        break;
    case RunConfig::Format::json: {
        ordered_json j{{"command", "sweep"},
                       {"n", n},
                       {"m1", r.m1},
                       {"m2", r.m2},
                       {"ordering", kOrdering},
                       {"degenerate_steps", r.degenerate_steps},
                       {"rows", jrows}};
        io::write_text(c.output_path, j.dump(2) + "\n");
        break;
    }
    case RunConfig::Format::svg: {
        svg::Plot plot("Second-order error E(eps), n = " + std::to_string(n) + ", edge (" +
                           std::to_string(r.m1) + "," + std::to_string(r.m2) + ")",
                       "eps", "E");
        for (auto& s : curves)
            plot.add_series(std::move(s));
        io::write_text(c.output_path, plot.render());
        break;
    }
    }
    return 0;
}

int cmd_track(const RunConfig& c, std::ostream& diag) {
    require_n(c);
    require(c.m1.has_value() && c.m2.has_value(), "options --m1 and --m2 are required");
    require(c.eps_min.has_value() && c.eps_max.has_value() && c.steps.has_value(),
            "options --eps-min, --eps-max and --steps are required");
    require(*c.eps_min < *c.eps_max, "--eps-min must be smaller than --eps-max");
    require(*c.steps >= 2, "--steps must be >= 2");

    const int n = c.n;
    std::vector<int> k_list = c.k_list;
    if (k_list.empty()) {
        // Default selection: eigenvectors 5..8 where available, else 1..min(4,n).
        if (n >= 8)
            k_list = {5, 6, 7, 8};
        else
            for (int k = 1; k <= std::min(4, n); ++k)
                k_list.push_back(k);
    }
    for (int k : k_list)
        require(k >= 1 && k <= n, "--k-list entries must be in [1, n]");

    const ContinuationResult r =
        track_eigenvectors(LineGraphSpec::canonical(n), *c.m1, *c.m2, *c.eps_min, *c.eps_max,
                           *c.steps);
    for (int step : r.degeneracy_flags)
        diag << "track: warning: spectrum at eps = " << r.epsilons[step]
             << " has a gap below 1e-9\n";

    auto flipped_at = [&r](int step, int k) {
        return std::any_of(r.flip_events.begin(), r.flip_events.end(),
                           [&](const FlipEvent& f) { return f.step == step && f.k == k; });
    };
    auto degenerate_at = [&r](int step) {
        return std::find(r.degeneracy_flags.begin(), r.degeneracy_flags.end(), step) !=
               r.degeneracy_flags.end();
    };

    switch (c.format) {
    case RunConfig::Format::csv: {
        std::vector<std::string> header = {"step", "epsilon", "k", "lambda", "flipped",
                                           "degenerate"};
        for (int i = 1; i <= n; ++i)
            header.push_back("v" + std::to_string(i));
        std::vector<std::vector<std::string>> rows;
        for (std::size_t step = 0; step < r.epsilons.size(); ++step)
            for (int k = 1; k <= n; ++k) {
                std::vector<std::string> row = {
                    std::to_string(step), format_double(r.epsilons[step]), std::to_string(k),
                    format_double(r.eigenvalues[step][k - 1]),
                    flipped_at(static_cast<int>(step), k) ? "1" : "0",
                    degenerate_at(static_cast<int>(step)) ? "1" : "0"};
                for (double v : r.eigenvectors[step][k - 1])
                    row.push_back(format_double(v));
                rows.push_back(std::move(row));
            }
        io::write_text(c.output_path, render_csv(header, rows));
        break;
    }
    case RunConfig::Format::json: {
        ordered_json jsteps = ordered_json::array();
        for (std::size_t step = 0; step < r.epsilons.size(); ++step) {
            ordered_json js{{"step", step},
                            {"epsilon", r.epsilons[step]},
                            {"eigenvalues", r.eigenvalues[step]},
                            {"eigenvectors", r.eigenvectors[step]}};
            jsteps.push_back(std::move(js));
        }
        ordered_json jflips = ordered_json::array();
        for (const FlipEvent& f : r.flip_events)
            jflips.push_back({{"step", f.step}, {"k", f.k}});
        ordered_json j{{"command", "track"},
                       {"n", n},
                       {"m1", r.m1},
                       {"m2", r.m2},
                       {"ordering", kOrdering},
                       {"flip_events", jflips},
                       {"degeneracy_flags", r.degeneracy_flags},
                       {"max_step_change", r.max_step_change},
                       {"steps", jsteps}};
        io::write_text(c.output_path, j.dump(2) + "\n");
        break;
    }
    case RunConfig::Format::svg: {
        // Overlay the selected eigenvectors at the first, middle and last
        // sweep positions.
        const std::size_t last = r.epsilons.size() - 1;
        std::vector<std::size_t> picks = {0, last / 2, last};
        picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
        svg::Plot plot("Eigenvector continuation, n = " + std::to_string(n) + ", edge (" +
                           std::to_string(r.m1) + "," + std::to_string(r.m2) + ")",
                       "component index", "component value");
        std::size_t color = 0;
        for (int k : k_list)
            for (std::size_t step : picks) {
                svg::Series s{"k=" + std::to_string(k) +
                                  " eps=" + io::format_double(r.epsilons[step]),
                              svg::palette_color(color++), true, false, {}};
                const Vector& v = r.eigenvectors[step][k - 1];
                for (int i = 0; i < n; ++i)
                    s.points.emplace_back(i + 1, v[i]);
                plot.add_series(std::move(s));
            }
        io::write_text(c.output_path, plot.render());
        break;
    }
    }
    return 0;
}

int cmd_validate(const RunConfig& c, std::ostream& diag) {
    require(c.max_n >= 2, "--max-n must be >= 2");
    require(c.format != RunConfig::Format::svg, "validate supports csv and json output only");

    const std::vector<IdentityCheckResult> results = run_identity_suite(c.max_n);
    bool all_passed = true;

    if (c.format == RunConfig::Format::csv) {
        std::vector<std::vector<std::string>> rows;
        for (const IdentityCheckResult& r : results) {
            rows.push_back({r.family, std::to_string(r.checks), r.passed ? "pass" : "fail",
                            format_double(r.worst), r.witness});
            all_passed = all_passed && r.passed;
        }
        io::write_text(c.output_path,
                       render_csv({"family", "checks", "status", "worst_error", "witness"},
                                  rows));
    } else {
        ordered_json jrows = ordered_json::array();
        for (const IdentityCheckResult& r : results) {
            jrows.push_back({{"family", r.family},
                             {"checks", r.checks},
                             {"passed", r.passed},
                             {"worst_error", r.worst},
                             {"witness", r.witness}});
            all_passed = all_passed && r.passed;
        }
        ordered_json j{{"command", "validate"}, {"max_n", c.max_n}, {"families", jrows}};
        io::write_text(c.output_path, j.dump(2) + "\n");
    }

    if (!all_passed) {
        for (const IdentityCheckResult& r : results)
            if (!r.passed)
                diag << "validate: FAIL " << r.family << " at " << r.witness << "\n";
        return 2;
    }
    return 0;
}

} // namespace

int run_command(const RunConfig& config, std::ostream& diag) {
    switch (config.command) {
    case RunConfig::Command::spectrum: return cmd_spectrum(config, diag);
    case RunConfig::Command::perturb: return cmd_perturb(config, diag);
    case RunConfig::Command::sweep: return cmd_sweep(config, diag);
    case RunConfig::Command::track: return cmd_track(config, diag);
    case RunConfig::Command::validate: return cmd_validate(config, diag);
    }
    throw std::invalid_argument("unknown command");
}

} // namespace linespect
