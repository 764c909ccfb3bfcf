// Command-line front end: solve a benchmark, run a convergence study, or
// print the amplification spectral radii of a configuration.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fracadi/study.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid_arguments = 2;
constexpr int exit_solver_error = 3;
constexpr int exit_budget_exceeded = 4;

struct OrderOptions {
    std::string problem = "example1";
    std::optional<double> alpha;
    std::optional<double> beta;
};

void add_order_options(CLI::App* cmd, OrderOptions& opts)
{
    cmd->add_option("--problem", opts.problem, "example1 or example2")
        ->check(CLI::IsMember({"example1", "example2"}));
    cmd->add_option("--alpha", opts.alpha, "fractional order in x, 1 < alpha <= 2");
    cmd->add_option("--beta", opts.beta, "fractional order in y, 1 < beta <= 2");
}

fracadi::Problem<double> make_problem(const OrderOptions& opts)
{
    const auto defaults
        = opts.problem == "example1" ? fracadi::example1() : fracadi::example2();
    const double alpha = opts.alpha.value_or(defaults.alpha);
    const double beta = opts.beta.value_or(defaults.beta);
    return fracadi::problem_by_name(opts.problem, alpha, beta);
}

std::vector<double> parse_steps(const std::string& text)
{
    std::vector<double> steps;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw fracadi::InputError("bad step '" + item + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos) {
            throw fracadi::InputError("bad step '" + item + "'");
        }
        steps.push_back(v);
    }
    return steps;
}

struct SolveOptions {
    OrderOptions orders;
    int mx = 10;
    int my = 10;
    double kt = 1e-3;
    std::string dump_path;
};

int run_solve(const SolveOptions& opts)
{
    const auto problem = make_problem(opts.orders);
    const auto grid = problem.make_grid(opts.mx, opts.my);
    const int steps = fracadi::time_steps_for(problem.horizon, opts.kt);

    const auto start = std::chrono::steady_clock::now();
    const auto u = fracadi::solve(problem, grid, steps);
    const double seconds
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::printf("problem      %s\n", problem.name.c_str());
    std::printf("alpha, beta  %.6g, %.6g\n", problem.alpha, problem.beta);
    std::printf("grid         %d x %d cells (h_x = %.6e, h_y = %.6e)\n", opts.mx, opts.my,
                grid.x.step(), grid.y.step());
    std::printf("time steps   %d (k_t = %.6e, T = %.6g)\n", steps, problem.horizon / steps,
                problem.horizon);
    if (problem.has_exact()) {
        const auto exact = fracadi::sample_field<double>(problem.exact, grid, problem.horizon);
        std::printf("max error    %.6e\n", fracadi::max_error(u, exact));
    }
    std::printf("seconds      %.3f\n", seconds);

    if (!opts.dump_path.empty()) {
        std::ofstream out(opts.dump_path);
        if (!out) {
            throw fracadi::InputError("cannot open '" + opts.dump_path + "' for writing");
        }
        fracadi::write_field(out, u);
    }
    return exit_ok;
}

struct StudyOptions {
    OrderOptions orders;
    std::string mode = "spatial";
    std::string steps;
    double fixed = 0.0;
    std::string format = "pretty";
    std::string out_path;
    double budget = 600.0;
};

int run_study_command(const StudyOptions& opts)
{
    fracadi::StudySpec spec;
    spec.problem = make_problem(opts.orders);
    spec.mode = fracadi::parse_study_mode(opts.mode);
    spec.steps = parse_steps(opts.steps);
    spec.fixed = opts.fixed;
    spec.budget_seconds = opts.budget;
    const auto format = fracadi::parse_report_format(opts.format);

    const auto report = fracadi::run_study(spec);
    const std::string text = fracadi::emit_report(report, format);
    if (opts.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opts.out_path);
        if (!out) {
            throw fracadi::InputError("cannot open '" + opts.out_path + "' for writing");
        }
        out << text;
    }
    if (!report.complete) {
        std::cerr << "study stopped after " << report.rows.size() << " of " << spec.steps.size()
                  << " rows: wall-time budget of " << spec.budget_seconds << " s exceeded\n";
        return exit_budget_exceeded;
    }
    return exit_ok;
}

struct StabilityOptions {
    OrderOptions orders;
    int mx = 10;
    int my = 10;
    double kt = 1e-3;
    double cx = 0.25;
    double cy = 0.25;
};

int run_stability(const StabilityOptions& opts)
{
    const auto problem = make_problem(opts.orders);
    const auto grid = problem.make_grid(opts.mx, opts.my);
    const auto ops = fracadi::make_stepping_operators(grid, problem.alpha, problem.beta, opts.cx,
                                                      opts.cy, opts.kt);
    const auto [rx, ry] = fracadi::amplification_spectral_radius(ops);
    std::printf("spectral_radius_x %.17g\n", rx);
    std::printf("spectral_radius_y %.17g\n", ry);
    std::printf("stable %s\n", rx < 1.0 && ry < 1.0 ? "yes" : "no");
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Compact ADI solver for the 2D Riesz space-fractional diffusion equation"};
    app.require_subcommand(1);

    SolveOptions solve_opts;
    auto* solve_cmd = app.add_subcommand("solve", "solve a benchmark problem to its final time");
    add_order_options(solve_cmd, solve_opts.orders);
    solve_cmd->add_option("--mx", solve_opts.mx, "cells in x")->required();
    solve_cmd->add_option("--my", solve_opts.my, "cells in y")->required();
    solve_cmd->add_option("--kt", solve_opts.kt, "nominal time step")->required();
    solve_cmd->add_option("--dump-field", solve_opts.dump_path, "write the final field here");

    StudyOptions study_opts;
    auto* study_cmd = app.add_subcommand("study", "measure errors and rates over halved steps");
    add_order_options(study_cmd, study_opts.orders);
    study_cmd->add_option("--mode", study_opts.mode, "spatial or temporal")
        ->check(CLI::IsMember({"spatial", "temporal"}));
    study_cmd->add_option("--steps", study_opts.steps, "comma-separated halving steps")->required();
    study_cmd->add_option("--fixed", study_opts.fixed, "k_t (spatial) or h (temporal)")->required();
    study_cmd->add_option("--format", study_opts.format, "csv or pretty")
        ->check(CLI::IsMember({"csv", "pretty"}));
    study_cmd->add_option("--out", study_opts.out_path, "write the report here");
    study_cmd->add_option("--budget", study_opts.budget, "wall-time budget in seconds");

    StabilityOptions stab_opts;
    auto* stab_cmd = app.add_subcommand("stability", "print the amplification spectral radii");
    add_order_options(stab_cmd, stab_opts.orders);
    stab_cmd->add_option("--mx", stab_opts.mx, "cells in x")->required();
    stab_cmd->add_option("--my", stab_opts.my, "cells in y")->required();
    stab_cmd->add_option("--kt", stab_opts.kt, "time step")->required();
    stab_cmd->add_option("--cx", stab_opts.cx, "diffusion coefficient in x");
    stab_cmd->add_option("--cy", stab_opts.cy, "diffusion coefficient in y");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid_arguments;
    }

    try {
        if (solve_cmd->parsed()) {
            return run_solve(solve_opts);
        }
        if (study_cmd->parsed()) {
            return run_study_command(study_opts);
        }
        return run_stability(stab_opts);
    } catch (const fracadi::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid_arguments;
    } catch (const fracadi::InvalidGridError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid_arguments;
    } catch (const fracadi::UnsupportedOrderError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid_arguments;
    } catch (const fracadi::Error& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return exit_solver_error;
    }
}
