#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "linespect/cli.hpp"

namespace {

using linespect::RunConfig;

void add_output_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("-o,--output", cfg.output_path, "Output path ('-' writes to stdout)");
    static const std::map<std::string, RunConfig::Format> formats{
        {"csv", RunConfig::Format::csv},
        {"json", RunConfig::Format::json},
        {"svg", RunConfig::Format::svg}};
    sub->add_option("--format", cfg.format, "Output format: csv, json or svg")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectra of perturbed line-graph Laplacians: closed forms, first-order "
                 "predictions and eigensolver cross-checks"};
    app.require_subcommand(1);

    RunConfig cfg;

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "Closed-form eigenvalues next to the eigensolver's");
    spectrum->add_option("--n", cfg.n, "Number of vertices")->required();
    add_output_options(spectrum, cfg);

    CLI::App* perturb = app.add_subcommand(
        "perturb", "First-order perturbed-spectrum prediction vs the eigensolver");
    perturb->add_option("--n", cfg.n, "Number of vertices")->required();
    perturb->add_option("--m1", cfg.m1, "First perturbed vertex (1-based)")->required();
    perturb->add_option("--m2", cfg.m2, "Second perturbed vertex (1-based)")->required();
    perturb->add_option("--epsilon", cfg.epsilon, "Perturbation weight")->required();
    add_output_options(perturb, cfg);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Second-order error E over an epsilon range");
    sweep->add_option("--n", cfg.n, "Number of vertices")->required();
    sweep->add_option("--m1", cfg.m1, "First perturbed vertex (1-based)")->required();
    sweep->add_option("--m2", cfg.m2, "Second perturbed vertex (1-based)")->required();
    sweep->add_option("--eps-min", cfg.eps_min, "Smallest epsilon (> 0)")->required();
    sweep->add_option("--eps-max", cfg.eps_max, "Largest epsilon")->required();
    sweep->add_option("--steps", cfg.steps, "Number of epsilon samples (>= 2)")->required();
    add_output_options(sweep, cfg);

    CLI::App* track = app.add_subcommand(
        "track", "Eigenvector continuation with sign-flip correction");
    track->add_option("--n", cfg.n, "Number of vertices")->required();
    track->add_option("--m1", cfg.m1, "First perturbed vertex (1-based)")->required();
    track->add_option("--m2", cfg.m2, "Second perturbed vertex (1-based)")->required();
    track->add_option("--eps-min", cfg.eps_min, "Starting epsilon")->required();
    track->add_option("--eps-max", cfg.eps_max, "Ending epsilon")->required();
    track->add_option("--steps", cfg.steps, "Number of epsilon samples (>= 2)")->required();
    track->add_option("--k-list", cfg.k_list,
                      "Eigenvector indices drawn in SVG output (default 5,6,7,8)")
        ->delimiter(',');
    add_output_options(track, cfg);

    CLI::App* validate = app.add_subcommand(
        "validate", "Run the cross-identity suite");
    validate->add_option("--max-n", cfg.max_n, "Largest matrix order exercised (default 64)");
    add_output_options(validate, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (spectrum->parsed())
        cfg.command = RunConfig::Command::spectrum;
    else if (perturb->parsed())
        cfg.command = RunConfig::Command::perturb;
    else if (sweep->parsed())
        cfg.command = RunConfig::Command::sweep;
    else if (track->parsed())
        cfg.command = RunConfig::Command::track;
    else
        cfg.command = RunConfig::Command::validate;

    try {
        return linespect::run_command(cfg, std::cerr);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "run '" << argv[0] << " --help' for usage\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    }
}
