// Command-line front end: run, sweep, check, report.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vhlfiht/experiment.hpp"

int main(int argc, char** argv)
{
    using namespace vhlfiht;

    CLI::App app{"Blind super-resolution by fast iterative hard thresholding on the "
                 "vectorized Hankel lift"};
    app.set_version_flag("--version", std::string(version_string));
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "Config file (keys mirror the long flags)");

    std::vector<Index> n_values{256};
    std::vector<Index> s_values{4};
    std::vector<Index> r_values{5};
    std::uint64_t seed       = 1;
    Index trials             = 1;
    Index max_iters          = 300;
    double tol               = 1e-10;
    std::string mode         = "fast";
    std::string variant      = "algorithm1";
    double step_size         = 1.0;
    Index n1                 = 0;
    std::string out;
    double success_threshold = 1e-4;
    bool complex_subspace    = false;
    bool no_timing           = false;
    unsigned jobs            = 0;
    bool inject_weight_fault = false;

    app.add_option("--n", n_values, "Signal length (sweep: list)")->expected(1, -1);
    app.add_option("--s", s_values, "Subspace dimension (sweep: list)")->expected(1, -1);
    app.add_option("--r", r_values, "Number of point sources (sweep: list)")->expected(1, -1);
    app.add_option("--seed", seed, "Master seed");
    app.add_option("--trials", trials, "Trials per sweep cell")->check(CLI::PositiveNumber);
    app.add_option("--max-iters", max_iters, "Iteration cap")->check(CLI::NonNegativeNumber);
    app.add_option("--tol", tol, "Relative residual tolerance")->check(CLI::PositiveNumber);
    app.add_option("--mode", mode, "Execution mode")->check(CLI::IsMember({"dense", "fast"}));
    app.add_option("--variant", variant, "Iteration variant")
        ->check(CLI::IsMember({"algorithm1", "weighted"}));
    app.add_option("--step-size", step_size, "Gradient step size");
    app.add_option("--n1", n1, "Override the Hankel split (number of block rows)");
    app.add_option("--out", out, "Output path");
    app.add_option("--success-threshold", success_threshold, "Sweep success threshold");
    app.add_flag("--complex-subspace", complex_subspace, "Draw B from a complex Gaussian");
    app.add_flag("--no-timing", no_timing, "Write elapsed_ms as 0 (byte-stable traces)");
    app.add_option("--jobs", jobs, "Sweep worker threads (0 = all cores)");

    auto* run    = app.add_subcommand("run", "Recover one synthesized instance and write its trace");
    auto* sweep  = app.add_subcommand("sweep", "Monte Carlo success rates over a grid");
    auto* check  = app.add_subcommand("check", "Run the invariant suite");
    auto* report = app.add_subcommand("report", "Print the assumption diagnostics");
    check->add_flag("--inject-weight-fault", inject_weight_fault,
                    "Perturb the weights before checking them")
        ->group("");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_success : exit_usage;
    }

    ExperimentConfig config;
    try
    {
        config.seed              = seed;
        config.trials            = trials;
        config.max_iters         = max_iters;
        config.residual_tol      = tol;
        config.mode              = parse_mode(mode);
        config.variant           = parse_variant(variant);
        config.step_size         = step_size;
        config.success_threshold = success_threshold;
        config.complex_subspace  = complex_subspace;
        config.record_timing     = !no_timing;
        config.jobs              = jobs;
        if (n1 > 0)
        {
            config.n1 = n1;
        }
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }

    auto single = [&](const std::vector<Index>& values, const char* flag, Index& target) {
        if (values.size() != 1)
        {
            std::cerr << "error: " << flag << " takes a single value for this command\n";
            return false;
        }
        target = values.front();
        return true;
    };

    try
    {
        if (*run || *report)
        {
            if (!single(n_values, "--n", config.n) || !single(s_values, "--s", config.s) ||
                !single(r_values, "--r", config.r))
            {
                return exit_usage;
            }
        }
        if (*run)
        {
            config.out = out.empty() ? "trace.csv" : out;
            return cmd_run(config, std::cout);
        }
        if (*sweep)
        {
            config.out = out.empty() ? "sweep.csv" : out;
            return cmd_sweep(config, SweepGrid{n_values, s_values, r_values}, std::cout);
        }
        if (*check)
        {
            CheckOptions options;
            options.perturb_weights = inject_weight_fault;
            return cmd_check(std::cout, options);
        }
        if (*report)
        {
            if (out.empty())
            {
                return cmd_report(config, std::cout, std::cerr);
            }
            std::ofstream file(out);
            if (!file)
            {
                std::cerr << "error: cannot open " << out << '\n';
                return exit_usage;
            }
            return cmd_report(config, file, std::cerr);
        }
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
