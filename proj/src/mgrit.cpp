#include "mgritnn/mgrit.hpp"

#include "mgritnn/rng.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace mgritnn {

namespace {

// Static partition of [0, count) across workers; each task writes
// disjoint state, so the result is independent of the worker count.
template <class Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn&& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t t = 0; t < count; ++t) fn(t);
        return;
    }
    const std::size_t n_threads = std::min(workers, count);
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t tid = 0; tid < n_threads; ++tid) {
        pool.emplace_back([&, tid] {
            const std::size_t lo = count * tid / n_threads;
            const std::size_t hi = count * (tid + 1) / n_threads;
            for (std::size_t t = lo; t < hi; ++t) fn(t);
        });
    }
    for (auto& th : pool) th.join();
}

void allocate_arrays(LevelState& level, std::size_t s) {
    level.w.assign(level.N + 1, WeightVector(s, 0.0));
    level.g.assign(level.N + 1, WeightVector(s, 0.0));
}

void add_into(WeightVector& dst, const WeightVector& a, const WeightVector& b) {
    for (std::size_t t = 0; t < dst.size(); ++t) dst[t] = a[t] + b[t];
}

} // namespace

Hierarchy build_hierarchy(const HierarchyConfig& cfg, const Dataset& data,
                          const NetworkTopology& topo) {
    if (cfg.m < 2) throw std::invalid_argument("coarsening factor must be >= 2");
    if (cfg.n0 < cfg.m)
        throw std::invalid_argument("N0 must be at least the coarsening factor");
    if (cfg.max_coarse < 1)
        throw std::invalid_argument("max_coarse must be >= 1");

    Hierarchy h;
    h.relaxation = cfg.relaxation;
    h.cycle = cfg.cycle;

    std::vector<std::size_t> sizes{cfg.n0};
    if (cfg.cycle == CycleKind::TwoLevel) {
        sizes.push_back(cfg.n0 / cfg.m);
    } else {
        while (sizes.back() > cfg.max_coarse)
            sizes.push_back(sizes.back() / cfg.m);
    }

    for (std::size_t ell = 0; ell < sizes.size(); ++ell) {
        LevelState level;
        level.level_index = ell;
        level.N = sizes[ell];
        level.m = cfg.m;
        level.alpha = cfg.alpha.at(ell);
        level.policy = cfg.policy;
        level.data = &data;
        if (ell > 0 && cfg.coarse_mode == CoarsePropagator::ExactComposition) {
            if (sizes.size() != 2)
                throw std::invalid_argument(
                    "exact composition supports two-level hierarchies only");
            level.exact_composition = true;
            level.compose_count = cfg.m;
            level.fine_alpha = cfg.alpha.at(0);
        }
        allocate_arrays(level, topo.weight_count());
        h.levels.push_back(std::move(level));
    }
    return h;
}

WeightVector phi_at(const NetworkTopology& topo, const LevelState& level,
                    std::size_t i, const WeightVector& w_in) {
    if (i >= level.N) throw std::out_of_range("phi_at: step index out of range");
    if (level.exact_composition) {
        WeightVector w = w_in;
        for (std::size_t k = 0; k < level.compose_count; ++k) {
            const Batch z =
                level.policy.batch_at(*level.data, level.compose_count * i + k);
            w = phi_step(topo, w, z, level.fine_alpha);
        }
        return w;
    }
    const Batch z = level.policy.batch_at(*level.data, i);
    return phi_step(topo, w_in, z, level.alpha);
}

void f_relax(const NetworkTopology& topo, LevelState& level,
             std::size_t workers) {
    const std::size_t last_c = level.last_c_point();
    const std::size_t n_intervals = last_c / level.m + 1;
    parallel_for(n_intervals, workers, [&](std::size_t iv) {
        const std::size_t c = iv * level.m;
        const std::size_t end = (c < last_c) ? c + level.m - 1 : level.N;
        for (std::size_t p = c + 1; p <= end; ++p)
            add_into(level.w[p], level.g[p], phi_at(topo, level, p - 1, level.w[p - 1]));
    });
}

void c_relax(const NetworkTopology& topo, LevelState& level,
             std::size_t workers) {
    const std::size_t n_c = level.last_c_point() / level.m; // C-points > 0
    parallel_for(n_c, workers, [&](std::size_t k) {
        const std::size_t c = (k + 1) * level.m;
        add_into(level.w[c], level.g[c], phi_at(topo, level, c - 1, level.w[c - 1]));
    });
}

void fcf_relax(const NetworkTopology& topo, LevelState& level,
               std::size_t workers) {
    f_relax(topo, level, workers);
    c_relax(topo, level, workers);
    f_relax(topo, level, workers);
}

double residual(const NetworkTopology& topo, const LevelState& level,
                std::vector<WeightVector>& r, std::size_t workers) {
    const std::size_t s = topo.weight_count();
    r.assign(level.N + 1, WeightVector(s));
    for (std::size_t t = 0; t < s; ++t) r[0][t] = level.g[0][t] - level.w[0][t];
    parallel_for(level.N, workers, [&](std::size_t k) {
        const std::size_t i = k + 1;
        const WeightVector prop = phi_at(topo, level, i - 1, level.w[i - 1]);
        for (std::size_t t = 0; t < s; ++t)
            r[i][t] = level.g[i][t] - level.w[i][t] + prop[t];
    });
    // fixed accumulation order: ascending step, ascending component
    double sq = 0.0;
    for (const WeightVector& ri : r)
        for (double v : ri) sq += v * v;
    return std::sqrt(sq);
}

void restrict_fas(const NetworkTopology& topo, const LevelState& fine,
                  LevelState& coarse, const std::vector<WeightVector>& r_fine) {
    const std::size_t m = fine.m;
    for (std::size_t i = 0; i <= coarse.N; ++i) coarse.w[i] = fine.w[m * i];
    coarse.g[0] = coarse.w[0];
    for (std::size_t i = 1; i <= coarse.N; ++i) {
        const WeightVector prop = phi_at(topo, coarse, i - 1, coarse.w[i - 1]);
        for (std::size_t t = 0; t < prop.size(); ++t)
            coarse.g[i][t] = coarse.w[i][t] - prop[t] + r_fine[m * i][t];
    }
}

void coarse_correct(const NetworkTopology& topo, LevelState& fine,
                    const std::vector<WeightVector>& v,
                    const std::vector<WeightVector>& w_pre_solve,
                    std::size_t workers) {
    const std::size_t m = fine.m;
    for (std::size_t i = 0; i < v.size(); ++i) {
        WeightVector& wf = fine.w[m * i];
        for (std::size_t t = 0; t < wf.size(); ++t)
            wf[t] += v[i][t] - w_pre_solve[i][t];
    }
    f_relax(topo, fine, workers);
}

void sequential_solve(const NetworkTopology& topo, LevelState& level) {
    level.w[0] = level.g[0];
    for (std::size_t i = 1; i <= level.N; ++i)
        add_into(level.w[i], level.g[i], phi_at(topo, level, i - 1, level.w[i - 1]));
}

std::optional<double> conv_rate(const std::vector<double>& residual_norms) {
    if (residual_norms.size() < 2) return std::nullopt;
    const double r0 = residual_norms.front();
    if (r0 <= 0.0) return std::nullopt;
    const double rk = residual_norms.back();
    const double k = static_cast<double>(residual_norms.size() - 1);
    return std::pow(rk / r0, 1.0 / k);
}

namespace {

void relax(const NetworkTopology& topo, const Hierarchy& h, LevelState& level,
           std::size_t workers) {
    if (h.relaxation == RelaxKind::FCF)
        fcf_relax(topo, level, workers);
    else
        f_relax(topo, level, workers);
}

// V-cycle over levels [ell .. coarsest]; the coarsest level is solved
// sequentially.
void v_cycle(const NetworkTopology& topo, Hierarchy& h, std::size_t ell,
             std::size_t workers) {
    if (ell + 1 == h.levels.size()) {
        sequential_solve(topo, h.levels[ell]);
        return;
    }
    LevelState& fine = h.levels[ell];
    LevelState& coarse = h.levels[ell + 1];
    relax(topo, h, fine, workers);
    std::vector<WeightVector> r;
    residual(topo, fine, r, workers);
    restrict_fas(topo, fine, coarse, r);
    const std::vector<WeightVector> pre = coarse.w;
    v_cycle(topo, h, ell + 1, workers);
    coarse_correct(topo, fine, coarse.w, pre, workers);
}

// One F-cycle: descend with relaxation and restriction to the coarsest
// level, solve there, then ascend through ever finer levels, each visit
// being a correction followed by a V-cycle from that level.
void f_cycle(const NetworkTopology& topo, Hierarchy& h, std::size_t workers) {
    const std::size_t L = h.levels.size();
    if (L == 2) {
        v_cycle(topo, h, 0, workers);
        return;
    }
    std::vector<std::vector<WeightVector>> pre(L);
    for (std::size_t ell = 0; ell + 1 < L; ++ell) {
        relax(topo, h, h.levels[ell], workers);
        std::vector<WeightVector> r;
        residual(topo, h.levels[ell], r, workers);
        restrict_fas(topo, h.levels[ell], h.levels[ell + 1], r);
        pre[ell + 1] = h.levels[ell + 1].w;
    }
    sequential_solve(topo, h.levels[L - 1]);
    for (std::size_t ell = L - 1; ell-- > 0;) {
        coarse_correct(topo, h.levels[ell], h.levels[ell + 1].w, pre[ell + 1],
                       workers);
        v_cycle(topo, h, ell, workers);
    }
}

} // namespace

void run_cycle(const NetworkTopology& topo, Hierarchy& h, std::size_t workers) {
    if (h.levels.empty()) throw std::invalid_argument("empty hierarchy");
    if (h.cycle == CycleKind::F)
        f_cycle(topo, h, workers);
    else
        v_cycle(topo, h, 0, workers);
}

ConvergenceReport solve(const NetworkTopology& topo, Hierarchy& h,
                        const SolverParams& params) {
    if (h.levels.empty()) throw std::invalid_argument("empty hierarchy");
    LevelState& fine = h.levels.front();
    const std::size_t s = topo.weight_count();
    const std::size_t workers = std::max<std::size_t>(1, params.workers);

    // initial guess: w[0] = g[0] = seeded init, zero everywhere else
    const WeightVector w0 = init_weights(topo, params.seed);
    for (std::size_t i = 0; i <= fine.N; ++i) {
        fine.w[i].assign(s, 0.0);
        fine.g[i].assign(s, 0.0);
    }
    fine.w[0] = w0;
    fine.g[0] = w0;

    const double tol =
        params.tol_coefficient * std::sqrt(static_cast<double>(fine.N));

    ConvergenceReport report;
    std::vector<WeightVector> r;
    report.residual_norms.push_back(residual(topo, fine, r, workers));
    if (params.log_residuals)
        std::fprintf(stderr, "[mgrit] iter 0 |r| = %.6e\n",
                     report.residual_norms.back());

    for (std::size_t k = 1; k <= params.max_iters; ++k) {
        run_cycle(topo, h, workers);
        report.iterations = k;
        const double norm = residual(topo, fine, r, workers);
        report.residual_norms.push_back(norm);
        if (params.log_residuals)
            std::fprintf(stderr, "[mgrit] iter %zu |r| = %.6e\n", k, norm);
        if (norm <= tol) {
            report.converged = true;
            f_relax(topo, fine, workers);
            break;
        }
    }
    report.rho = conv_rate(report.residual_norms);
    report.solution = fine.w;
    return report;
}

void write_checkpoint(std::ostream& os,
                      const std::vector<WeightVector>& solution) {
    char buf[64];
    for (std::size_t i = 0; i < solution.size(); ++i) {
        os << i;
        for (double v : solution[i]) {
            std::snprintf(buf, sizeof buf, " %.17g", v);
            os << buf;
        }
        os << '\n';
    }
}

} // namespace mgritnn
