#include "mgritnn/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace mgritnn {

std::vector<WeightVector> sequential_reference(const NetworkTopology& topo,
                                               const Dataset& data,
                                               const TrainingPolicy& policy,
                                               double alpha, std::size_t n_steps,
                                               std::uint64_t seed) {
    std::vector<WeightVector> traj;
    traj.reserve(n_steps + 1);
    traj.push_back(init_weights(topo, seed));
    for (std::size_t i = 0; i < n_steps; ++i) {
        const Batch z = policy.batch_at(data, i);
        traj.push_back(phi_step(topo, traj.back(), z, alpha));
    }
    return traj;
}

EquivalenceResult check_mgrit_equivalence(
    const ConvergenceReport& report,
    const std::vector<WeightVector>& reference, double tolerance) {
    if (!report.converged)
        throw std::invalid_argument("equivalence check requires a converged solve");
    if (report.solution.size() != reference.size())
        throw std::invalid_argument("trajectory length mismatch");
    EquivalenceResult res;
    res.tolerance = tolerance;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        for (std::size_t t = 0; t < reference[i].size(); ++t) {
            const double d = std::abs(report.solution[i][t] - reference[i][t]);
            if (d > res.max_abs_diff) {
                res.max_abs_diff = d;
                res.at_step = i;
            }
        }
    }
    res.passed = res.max_abs_diff <= tolerance;
    return res;
}

EquivalenceResult exactness_check(std::size_t n0, std::size_t m,
                                  const NetworkTopology& topo,
                                  const Dataset& data,
                                  const TrainingPolicy& policy, double alpha,
                                  std::uint64_t seed, double tolerance) {
    HierarchyConfig cfg;
    cfg.n0 = n0;
    cfg.m = m;
    cfg.alpha = AlphaSchedule::constant(alpha);
    cfg.policy = policy;
    cfg.cycle = CycleKind::TwoLevel;
    cfg.relaxation = RelaxKind::FCF;
    cfg.coarse_mode = CoarsePropagator::ExactComposition;
    Hierarchy h = build_hierarchy(cfg, data, topo);

    SolverParams params;
    params.seed = seed;
    params.max_iters = 1;
    params.tol_coefficient = 0.0; // force exactly one iteration
    const ConvergenceReport report = solve(topo, h, params);

    const std::vector<WeightVector> ref =
        sequential_reference(topo, data, policy, alpha, n0, seed);

    EquivalenceResult res;
    res.tolerance = tolerance;
    for (std::size_t i = 0; i * m <= n0; ++i) {
        const std::size_t fi = i * m;
        for (std::size_t t = 0; t < ref[fi].size(); ++t) {
            const double d = std::abs(h.levels[0].w[fi][t] - ref[fi][t]);
            if (d > res.max_abs_diff) {
                res.max_abs_diff = d;
                res.at_step = fi;
            }
        }
    }
    res.passed = res.max_abs_diff <= tolerance;
    return res;
}

double half_squared_error(const NetworkTopology& topo, const WeightVector& w,
                          const Batch& z) {
    const Activations act = forward(topo, w, z.X, z.rows);
    const auto& out = act.output();
    double sum = 0.0;
    for (std::size_t t = 0; t < out.size(); ++t) {
        const double e = z.Y[t] - out[t];
        sum += e * e;
    }
    return 0.5 * sum;
}

double gradient_check(const NetworkTopology& topo, const WeightVector& w,
                      const Batch& z, const WeightVector& gradient,
                      double fd_step) {
    if (gradient.size() != w.size())
        throw std::invalid_argument("gradient length mismatch");
    double worst = 0.0;
    WeightVector probe = w;
    for (std::size_t t = 0; t < w.size(); ++t) {
        probe[t] = w[t] + fd_step;
        const double ep = half_squared_error(topo, probe, z);
        probe[t] = w[t] - fd_step;
        const double em = half_squared_error(topo, probe, z);
        probe[t] = w[t];
        const double fd = -(ep - em) / (2.0 * fd_step);
        const double denom = std::max(1.0, std::abs(gradient[t]));
        worst = std::max(worst, std::abs(fd - gradient[t]) / denom);
    }
    return worst;
}

} // namespace mgritnn
