#include "mgritnn/harness.hpp"

#include "mgritnn/oracle.hpp"
#include "mgritnn/rng.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mgritnn {

namespace {

CycleKind parse_cycle(const std::string& name) {
    if (name == "two-level") return CycleKind::TwoLevel;
    if (name == "v") return CycleKind::V;
    if (name == "f") return CycleKind::F;
    throw std::invalid_argument("cycle: expected two-level|v|f, got '" + name + "'");
}

RelaxKind parse_relax(const std::string& name) {
    if (name == "f") return RelaxKind::F;
    if (name == "fcf") return RelaxKind::FCF;
    throw std::invalid_argument("relax: expected f|fcf, got '" + name + "'");
}

std::string fmt_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

Dataset make_dataset(const ExperimentConfig& cfg) {
    if (cfg.problem == "xor") return xor_dataset();
    if (cfg.problem == "binadd")
        return binary_addition_dataset(cfg.seed, cfg.instances, cfg.bits);
    throw std::invalid_argument("problem: expected xor|binadd, got '" +
                                cfg.problem + "'");
}

NetworkTopology make_topology(const ExperimentConfig& cfg) {
    if (cfg.problem == "xor") return NetworkTopology({3, 4, 1});
    if (cfg.problem == "binadd")
        return NetworkTopology({2 * cfg.bits, 128, 64, cfg.bits});
    throw std::invalid_argument("problem: expected xor|binadd, got '" +
                                cfg.problem + "'");
}

HierarchyConfig make_hierarchy_config(const ExperimentConfig& cfg,
                                      std::size_t n0) {
    const SolverPreset preset =
        make_preset(cfg.preset, cfg.alpha_b, cfg.alpha_max);
    HierarchyConfig hc;
    hc.n0 = n0;
    hc.m = preset.m;
    hc.max_coarse = cfg.max_coarse;
    hc.alpha = preset.alpha;
    hc.policy = preset.policy;
    hc.cycle = parse_cycle(cfg.cycle);
    hc.relaxation = parse_relax(cfg.relaxation);
    return hc;
}

std::size_t level_count_for(const ExperimentConfig& cfg, std::size_t n0) {
    const HierarchyConfig hc = make_hierarchy_config(cfg, n0);
    if (hc.cycle == CycleKind::TwoLevel) return 2;
    std::size_t levels = 1;
    while (n0 > hc.max_coarse) {
        n0 /= hc.m;
        ++levels;
    }
    return levels;
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg) {
    const Dataset data = make_dataset(cfg);
    const NetworkTopology topo = make_topology(cfg);
    std::vector<SweepRow> rows;
    for (std::size_t n0 : cfg.n0_list) {
        Hierarchy h = build_hierarchy(make_hierarchy_config(cfg, n0), data, topo);
        SolverParams params;
        params.tol_coefficient = cfg.tol_coefficient;
        params.max_iters = cfg.max_iters;
        params.seed = cfg.seed;
        params.workers = cfg.workers;
        params.log_residuals = cfg.log_residuals;

        const auto start = std::chrono::steady_clock::now();
        const ConvergenceReport rep = solve(topo, h, params);
        const auto stop = std::chrono::steady_clock::now();

        SweepRow row;
        row.n0 = n0;
        row.levels = h.levels.size();
        row.iters = rep.iterations;
        row.rho = rep.rho;
        row.converged = rep.converged;
        row.wall_ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
        row.residual_norms = rep.residual_norms;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<SpeedupRow> run_speedup(const ExperimentConfig& cfg,
                                    const std::vector<std::size_t>& niters) {
    if (niters.empty())
        throw std::invalid_argument("speedup needs at least one iteration count");
    if (niters.size() != 1 && niters.size() != cfg.n0_list.size())
        throw std::invalid_argument(
            "iteration counts must be one value or one per N0");
    const bool f_cycle = cfg.cycle == "f";
    parse_cycle(cfg.cycle); // validate
    std::vector<SpeedupRow> rows;
    for (std::size_t k = 0; k < cfg.n0_list.size(); ++k) {
        SpeedupRow row;
        row.n0 = cfg.n0_list[k];
        row.levels = level_count_for(cfg, row.n0);
        row.niter = niters.size() == 1 ? niters[0] : niters[k];
        row.cycle = cfg.cycle;
        row.sigma = f_cycle ? sigma_f(row.levels, row.niter)
                            : sigma_v(row.levels, row.niter);
        row.speedup = potential_speedup(row.n0, row.sigma);
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_config_header(std::ostream& os, const ExperimentConfig& cfg) {
    os << "# preset=" << cfg.preset << "\n# problem=" << cfg.problem << "\n# n0=";
    for (std::size_t k = 0; k < cfg.n0_list.size(); ++k)
        os << (k ? "," : "") << cfg.n0_list[k];
    os << "\n# cycle=" << cfg.cycle << "\n# relaxation=" << cfg.relaxation
       << "\n# alpha_b=" << fmt_double(cfg.alpha_b)
       << "\n# alpha_max=" << fmt_double(cfg.alpha_max) << "\n# seed=" << cfg.seed
       << "\n# workers=" << cfg.workers << "\n# max_coarse=" << cfg.max_coarse
       << "\n# tol_coefficient=" << fmt_double(cfg.tol_coefficient)
       << "\n# max_iters=" << cfg.max_iters;
    if (cfg.problem == "binadd")
        os << "\n# instances=" << cfg.instances << "\n# bits=" << cfg.bits;
    os << "\n";
}

std::string format_sweep_row(const ExperimentConfig& cfg, const SweepRow& row) {
    std::ostringstream os;
    os << row.n0 << ',' << row.levels << ',' << cfg.cycle << ','
       << cfg.relaxation << ',' << cfg.preset << ',' << fmt_double(cfg.alpha_b)
       << ',' << fmt_double(cfg.alpha_max) << ',';
    if (row.converged)
        os << row.iters;
    else
        os << cfg.max_iters << '+';
    os << ',';
    if (row.converged && row.rho)
        os << fmt_double(*row.rho);
    else
        os << '*';
    os << ',' << (row.converged ? "true" : "false") << ','
       << fmt_double(row.wall_ms);
    return os.str();
}

void write_sweep_csv(std::ostream& os, const ExperimentConfig& cfg,
                     const std::vector<SweepRow>& rows) {
    write_config_header(os, cfg);
    os << "N0,levels,cycle,relaxation,preset,alpha_b,alpha_max,iters,rho,"
          "converged,wall_ms\n";
    for (const SweepRow& row : rows) os << format_sweep_row(cfg, row) << '\n';
}

void write_speedup_csv(std::ostream& os, const ExperimentConfig& cfg,
                       const std::vector<SpeedupRow>& rows) {
    write_config_header(os, cfg);
    os << "N0,levels,niter,cycle,sigma,speedup\n";
    for (const SpeedupRow& row : rows)
        os << row.n0 << ',' << row.levels << ',' << row.niter << ','
           << row.cycle << ',' << row.sigma << ',' << fmt_double(row.speedup)
           << '\n';
}

int run_verify(std::ostream& report, std::uint64_t seed) {
    int failures = 0;
    const auto record = [&](const std::string& name, bool ok,
                            const std::string& detail) {
        report << (ok ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) report << " (" << detail << ")";
        report << '\n';
        if (!ok) ++failures;
    };

    const NetworkTopology topo({3, 4, 1});
    const Dataset ds = xor_dataset();
    const Batch z = ds.full_batch();
    TrainingPolicy batch_policy;
    batch_policy.kind = TrainingPolicy::Kind::Batch;

    // gradient vs central finite differences, 100 random draws
    {
        Rng rng(seed);
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            WeightVector w(topo.weight_count());
            for (double& v : w) v = 2.0 * rng.next_double() - 1.0;
            const WeightVector grad = gradient_direction(topo, w, z);
            worst = std::max(worst, gradient_check(topo, w, z, grad));
        }
        record("gradient-fd-oracle", worst < 1e-6,
               "worst rel err " + fmt_double(worst));
    }

    // two-level reduction exactness with the composed propagator
    {
        const std::pair<std::size_t, std::size_t> configs[] = {
            {8, 2}, {16, 2}, {16, 4}, {64, 4}};
        for (auto [n0, m] : configs) {
            const EquivalenceResult res =
                exactness_check(n0, m, topo, ds, batch_policy, 1.0, seed);
            record("exactness-n0-" + std::to_string(n0) + "-m-" +
                       std::to_string(m),
                   res.passed, "max diff " + fmt_double(res.max_abs_diff));
        }
    }

    // converged MGRIT equals the sequential trajectory
    {
        ExperimentConfig cfg;
        cfg.preset = "solver1";
        cfg.n0_list = {100};
        cfg.seed = seed;
        const Dataset data = make_dataset(cfg);
        Hierarchy h = build_hierarchy(make_hierarchy_config(cfg, 100), data, topo);
        SolverParams params;
        params.seed = seed;
        const ConvergenceReport rep = solve(topo, h, params);
        bool ok = rep.converged;
        std::string detail = "did not converge";
        if (ok) {
            const auto ref =
                sequential_reference(topo, data, batch_policy, 1.0, 100, seed);
            const EquivalenceResult eq = check_mgrit_equivalence(rep, ref, 1e-6);
            ok = eq.passed;
            detail = "max diff " + fmt_double(eq.max_abs_diff);
        }
        record("mgrit-sequential-equivalence", ok, detail);
    }

    // worker count must not change the residual history
    {
        ExperimentConfig cfg;
        cfg.preset = "solver1";
        cfg.cycle = "v";
        cfg.n0_list = {100};
        cfg.seed = seed;
        cfg.workers = 1;
        const auto rows1 = run_sweep(cfg);
        cfg.workers = 4;
        const auto rows4 = run_sweep(cfg);
        record("worker-determinism",
               rows1[0].residual_norms == rows4[0].residual_norms,
               "residual histories bitwise compared");
    }

    return failures == 0 ? 0 : 1;
}

} // namespace mgritnn
