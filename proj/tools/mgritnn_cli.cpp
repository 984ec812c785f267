#include "mgritnn/harness.hpp"
#include "mgritnn/oracle.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace mgritnn;

// --out is resolved against MGRITNN_OUT_DIR when relative.
std::filesystem::path resolve_out(const std::string& out) {
    std::filesystem::path p(out);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("MGRITNN_OUT_DIR"))
            p = std::filesystem::path(dir) / p;
    }
    return p;
}

std::ofstream open_out(const std::string& out) {
    const auto path = resolve_out(out);
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream os(path);
    if (!os) throw CLI::RuntimeError("cannot open output file " + path.string(), 1);
    return os;
}

void add_config_options(CLI::App* cmd, ExperimentConfig& cfg) {
    cmd->set_config("--config", "", "flat key=value config file; flags override");
    cmd->add_option("--preset", cfg.preset,
                    "naive|solver1|solver2|solver2-slow|solver3-alias");
    cmd->add_option("--problem", cfg.problem, "xor|binadd");
    cmd->add_option("--n0", cfg.n0_list, "fine-level step counts")
        ->delimiter(',');
    cmd->add_option("--cycle", cfg.cycle, "two-level|v|f");
    cmd->add_option("--relax", cfg.relaxation, "f|fcf");
    cmd->add_option("--alpha-b", cfg.alpha_b, "base learning rate");
    cmd->add_option("--alpha-max", cfg.alpha_max, "coarse-level rate cap");
    cmd->add_option("--seed", cfg.seed, "rng seed");
    cmd->add_option("--workers", cfg.workers, "relaxation worker count");
    cmd->add_option("--max-coarse", cfg.max_coarse, "coarsest-level step cap");
    cmd->add_option("--tol", cfg.tol_coefficient, "halting tolerance coefficient");
    cmd->add_option("--max-iters", cfg.max_iters, "iteration cap");
    cmd->add_option("--instances", cfg.instances, "binadd training pairs");
    cmd->add_option("--bits", cfg.bits, "binadd operand width");
    cmd->add_flag("--log-residuals", cfg.log_residuals,
                  "per-iteration residual norms on stderr");
}

int cmd_sweep(const ExperimentConfig& cfg, const std::string& out) {
    const auto rows = run_sweep(cfg);
    if (out.empty()) {
        write_sweep_csv(std::cout, cfg, rows);
    } else {
        auto os = open_out(out);
        write_sweep_csv(os, cfg, rows);
    }
    return 0;
}

int cmd_speedup(ExperimentConfig cfg, std::vector<std::size_t> niters,
                const std::string& out) {
    if (niters.empty()) {
        // take iteration counts from a sweep with this config
        for (const SweepRow& row : run_sweep(cfg)) {
            if (!row.converged)
                throw CLI::RuntimeError(
                    "sweep did not converge for N0=" + std::to_string(row.n0) +
                        "; pass --niter explicitly",
                    1);
            niters.push_back(row.iters);
        }
    }
    const auto rows = run_speedup(cfg, niters);
    if (out.empty()) {
        write_speedup_csv(std::cout, cfg, rows);
    } else {
        auto os = open_out(out);
        write_speedup_csv(os, cfg, rows);
    }
    return 0;
}

int cmd_train_serial(const ExperimentConfig& cfg, std::size_t steps,
                     const std::string& out) {
    const NetworkTopology topo = make_topology(cfg);
    const Dataset data = make_dataset(cfg);
    const SolverPreset preset = make_preset(cfg.preset, cfg.alpha_b, cfg.alpha_max);
    const double alpha = preset.alpha.at(0);
    const Batch full = data.full_batch();

    WeightVector w = init_weights(topo, cfg.seed);
    for (std::size_t i = 0; i < steps; ++i) {
        if (i % 10000 == 0)
            std::printf("Error:%.12g\n", mean_abs_error(topo, w, full));
        w = phi_step(topo, w, preset.policy.batch_at(data, i), alpha);
    }
    std::printf("Error:%.12g\n", mean_abs_error(topo, w, full));
    if (!out.empty()) {
        auto os = open_out(out);
        write_checkpoint(os, {w});
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"MGRIT-parallelized neural network training experiments"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    std::string out;
    std::vector<std::size_t> niters;
    std::size_t serial_steps = 60000;

    auto* sweep = app.add_subcommand(
        "sweep", "solve each N0 and emit a convergence CSV");
    add_config_options(sweep, cfg);
    sweep->add_option("--out", out, "output CSV path (default stdout)");

    auto* speedup = app.add_subcommand(
        "speedup", "emit the potential-speedup model CSV");
    add_config_options(speedup, cfg);
    speedup->add_option("--niter", niters,
                        "iteration counts (one value or one per N0); "
                        "omitted: measured by a sweep")
        ->delimiter(',');
    speedup->add_option("--out", out, "output CSV path (default stdout)");

    auto* verify = app.add_subcommand(
        "verify", "run the oracle suite; nonzero exit on failure");
    verify->add_option("--seed", cfg.seed, "rng seed");

    auto* serial = app.add_subcommand(
        "train-serial", "sequential training with an error trace");
    add_config_options(serial, cfg);
    serial->add_option("--steps", serial_steps, "training step count");
    serial->add_option("--out", out, "checkpoint path for the final weights");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) return cmd_sweep(cfg, out);
        if (speedup->parsed()) return cmd_speedup(cfg, niters, out);
        if (verify->parsed()) return run_verify(std::cout, cfg.seed);
        if (serial->parsed()) return cmd_train_serial(cfg, serial_steps, out);
    } catch (const CLI::RuntimeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.get_exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
