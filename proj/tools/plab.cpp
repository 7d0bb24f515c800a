#include "CLI11.hpp"

#include <iostream>
#include <string>

#include "plab/cli.hpp"

namespace {

void add_common(CLI::App* cmd, plab::ExperimentConfig& cfg) {
    cmd->add_option("--seed", cfg.seed, "RNG seed; 0 draws a fresh one")->capture_default_str();
    cmd->add_option("--format", cfg.format, "Output format: json or csv")->capture_default_str();
    cmd->add_option("--out", cfg.out, "Write output to this file (atomic) instead of stdout");
}

void add_caps(CLI::App& app) {
    plab::Caps& caps = plab::global_caps();
    app.add_option("--cap-enumeration", caps.enumeration, "Max n for level enumeration")->capture_default_str();
    app.add_option("--cap-oracle", caps.oracle, "Max n for the path-counting oracle")->capture_default_str();
    app.add_option("--cap-level", caps.level, "Max graded-graph level")->capture_default_str();
    app.add_option("--cap-sampling", caps.sampling, "Max growth sample size")->capture_default_str();
    app.add_option("--cap-exact-threshold", caps.exact_threshold,
                   "Largest sample size using exact weights")->capture_default_str();
    app.add_option("--cap-coherence", caps.coherence, "Max level for coherence sweeps")->capture_default_str();
    app.add_option("--cap-numberings", caps.numberings, "Max numbering length")->capture_default_str();
    app.add_option("--cap-minor-order", caps.minor_order, "Max Toeplitz minor order")->capture_default_str();
    app.add_option("--cap-minor-window", caps.minor_window, "Max Toeplitz index window")->capture_default_str();
    app.add_option("--cap-series-order", caps.series_order, "Max series truncation order")->capture_default_str();
    app.add_option("--cap-prefix-k", caps.prefix_k, "Max prefix length")->capture_default_str();
    app.add_option("--cap-poset-dim", caps.poset_dim, "Max lattice dimension")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact experiments on growth of random standard tableaux"};
    app.require_subcommand(1);
    add_caps(app);

    plab::ExperimentConfig cfg;

    auto* measure = app.add_subcommand("measure", "Exact level weights dim^2 / n!");
    measure->add_option("--n", cfg.n, "Level")->required();
    add_common(measure, cfg);

    auto* sample = app.add_subcommand("sample", "Random growth tableaux");
    sample->add_option("--n", cfg.n, "Cells per sample")->required();
    sample->add_option("--trials", cfg.trials, "Number of samples (default 1)");
    add_common(sample, cfg);

    auto* coherence = app.add_subcommand("coherence", "Extension-sum identity on one level");
    coherence->add_option("--n", cfg.n, "Level")->required();
    add_common(coherence, cfg);

    auto* prefix = app.add_subcommand("prefix-dist", "Prefix distribution induced by a shape");
    prefix->add_option("--shape", cfg.shape, "Shape as [4,2,1]")->required();
    prefix->add_option("--k", cfg.k, "Prefix length")->required();
    add_common(prefix, cfg);

    auto* plgraph = app.add_subcommand("plgraph", "Mass-ratio test on a graded graph");
    plgraph->add_option("--up-to", cfg.up_to, "Highest vertex level to check")->required();
    plgraph->add_option("--graph", cfg.graph, "Graph JSON file (default: the diagram graph)");
    plgraph->add_flag("--pascal", cfg.pascal, "Use the Pascal triangle graph");
    plgraph->add_option("--emit-graph", cfg.emit_graph, "Also write the graph as JSON here");
    add_common(plgraph, cfg);

    auto* numberings = app.add_subcommand("numberings", "Enumerate monotone numberings");
    numberings->add_option("--poset", cfg.poset, "z2, z3, z4, or nonrigid")->capture_default_str();
    numberings->add_option("--n", cfg.n, "Numbering length")->required();
    numberings->add_option("--width", cfg.width, "Window width for the nonrigid poset")->capture_default_str();
    add_common(numberings, cfg);

    auto* density = app.add_subcommand("density", "Ideal density of a numbering");
    density->add_option("--ideal", cfg.ideal, "whole, or clauses like rows=0,1;cols=0")->capture_default_str();
    density->add_option("--n", cfg.n, "Sample size when drawing a fresh numbering");
    density->add_option("--numbering", cfg.numbering_file, "JSON file with an explicit numbering");
    density->add_option("--poset", cfg.poset, "Poset for validating an explicit numbering")->capture_default_str();
    density->add_option("--width", cfg.width, "Window width for the nonrigid poset")->capture_default_str();
    add_common(density, cfg);

    auto* transfer = app.add_subcommand("transfer", "One transfer step on a tableau");
    transfer->add_option("--tableau", cfg.tableau, "Tableau rows as JSON, or @file")->required();
    add_common(transfer, cfg);

    auto* qs = app.add_subcommand("qs-test", "Prefix law after one transfer step");
    qs->add_option("--k", cfg.k, "Prefix length (2..4)")->required();
    qs->add_option("--n", cfg.n, "Sample size")->required();
    qs->add_option("--trials", cfg.trials, "Monte Carlo trials")->required();
    add_common(qs, cfg);

    auto* tp = app.add_subcommand("tp-check", "Exhaustive Toeplitz minor positivity sweep");
    tp->add_option("--coeffs", cfg.coeffs, "exp, comma list of rationals, or @file")->required();
    tp->add_option("--order", cfg.order, "Largest minor order")->required();
    tp->add_option("--window", cfg.window, "Index window [0, window)")->required();
    add_common(tp, cfg);

    auto* thoma = app.add_subcommand("thoma", "Coefficients of the product form");
    thoma->add_option("--alpha", cfg.alpha, "Comma list of rationals (may be empty)");
    thoma->add_option("--beta", cfg.beta, "Comma list of rationals (may be empty)");
    thoma->add_option("--gamma", cfg.gamma, "Rational")->capture_default_str();
    thoma->add_option("--m", cfg.m, "Leading power of z")->capture_default_str();
    thoma->add_option("--order", cfg.order, "Truncation order")->required();
    add_common(thoma, cfg);

    auto* chargf = app.add_subcommand("chargf", "Generating function from cycle values");
    chargf->add_option("--chi", cfg.chi, "Comma list of rationals chi(1), chi(2), ...")->required();
    chargf->add_option("--order", cfg.order, "Truncation order")->required();
    add_common(chargf, cfg);

    auto* first_row = app.add_subcommand("first-row", "First-row statistics over growth samples");
    first_row->add_option("--n", cfg.n, "Cells per sample")->required();
    first_row->add_option("--trials", cfg.trials, "Trials")->required();
    add_common(first_row, cfg);

    auto* sublin = app.add_subcommand("sublinearity", "First-row fraction across sizes");
    sublin->add_option("--sizes", cfg.sizes, "Comma list of sizes, increasing")->required();
    sublin->add_option("--trials", cfg.trials, "Trials per size")->required();
    add_common(sublin, cfg);

    auto* selftest = app.add_subcommand("selftest", "Quick invariant sweep");
    add_common(selftest, cfg);

    CLI11_PARSE(app, argc, argv);

    cfg.command = app.get_subcommands().front()->get_name();
    try {
        return plab::run_experiment(cfg);
    } catch (const plab::resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const plab::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
