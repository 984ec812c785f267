#ifndef MGRITNN_MGRIT_HPP
#define MGRITNN_MGRIT_HPP

#include "mgritnn/dataset.hpp"
#include "mgritnn/network.hpp"
#include "mgritnn/schedules.hpp"
#include "mgritnn/topology.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace mgritnn {

enum class RelaxKind { F, FCF };
enum class CycleKind { TwoLevel, V, F };
enum class CoarsePropagator { Rediscretized, ExactComposition };

/** One level of the hierarchy: N steps (points 0..N), the coarsening
 * factor towards the next level, the level's propagator configuration,
 * and the solution / right-hand-side arrays. */
struct LevelState {
    std::size_t level_index = 0;
    std::size_t N = 0;
    std::size_t m = 2;
    double alpha = 1.0;
    TrainingPolicy policy;
    const Dataset* data = nullptr;

    // Exact m-fold composition of the fine propagator, used by the
    // reduction-exactness checks; fine-level alpha and step indices apply.
    bool exact_composition = false;
    std::size_t compose_count = 1;
    double fine_alpha = 0.0;

    std::vector<WeightVector> w; // N+1 entries
    std::vector<WeightVector> g; // N+1 entries

    /// Index of the last C-point (m * floor(N/m)).
    std::size_t last_c_point() const { return (N / m) * m; }
};

struct HierarchyConfig {
    std::size_t n0 = 100;
    std::size_t m = 2;
    std::size_t max_coarse = 10;
    AlphaSchedule alpha;
    TrainingPolicy policy;
    CycleKind cycle = CycleKind::TwoLevel;
    RelaxKind relaxation = RelaxKind::FCF;
    CoarsePropagator coarse_mode = CoarsePropagator::Rediscretized;
};

struct Hierarchy {
    std::vector<LevelState> levels; // finest first
    RelaxKind relaxation = RelaxKind::FCF;
    CycleKind cycle = CycleKind::TwoLevel;
    std::size_t workers = 1;
};

struct SolverParams {
    double tol_coefficient = 1e-9;
    std::size_t max_iters = 50;
    std::uint64_t seed = 1;
    std::size_t workers = 1;
    bool log_residuals = false; // per-iteration norms to stderr
};

struct ConvergenceReport {
    std::size_t iterations = 0;
    std::vector<double> residual_norms; // r_0 .. r_k
    std::optional<double> rho;
    bool converged = false;
    std::vector<WeightVector> solution; // finest-level w
};

/** Repeated floor division by m until N <= max_coarse; a two-level cycle
 * forces exactly two levels.  Arrays are allocated and zeroed; the caller
 * owns the dataset, which must outlive the hierarchy. */
Hierarchy build_hierarchy(const HierarchyConfig& cfg, const Dataset& data,
                          const NetworkTopology& topo);

/// The propagator at step i of a level: w_{i+1} = Phi_i(w_in).
WeightVector phi_at(const NetworkTopology& topo, const LevelState& level,
                    std::size_t i, const WeightVector& w_in);

/// Sequential sweep over the F-points of every C-interval (parallel across
/// intervals when workers > 1; results are identical for any worker count).
void f_relax(const NetworkTopology& topo, LevelState& level,
             std::size_t workers = 1);
/// Update every C-point c > 0 from its preceding F-point.
void c_relax(const NetworkTopology& topo, LevelState& level,
             std::size_t workers = 1);
void fcf_relax(const NetworkTopology& topo, LevelState& level,
               std::size_t workers = 1);

/** Residual r = g - A(w): r[0] = g[0] - w[0], r[i] = g[i] - w[i] + Phi(w[i-1]).
 * The returned norm is the Euclidean norm over all (N+1)*s entries,
 * accumulated in ascending step then component order. */
double residual(const NetworkTopology& topo, const LevelState& level,
                std::vector<WeightVector>& r, std::size_t workers = 1);

/** FAS restriction: inject w at C-points and build the coarse right-hand
 * side g[i] = (w[i] - Phi_coarse(w[i-1])) + r_fine[m*i], g[0] = w[0]. */
void restrict_fas(const NetworkTopology& topo, const LevelState& fine,
                  LevelState& coarse, const std::vector<WeightVector>& r_fine);

/** Apply the coarse error v - w_pre_solve at the fine C-points, then
 * F-relax to complete ideal interpolation. */
void coarse_correct(const NetworkTopology& topo, LevelState& fine,
                    const std::vector<WeightVector>& v,
                    const std::vector<WeightVector>& w_pre_solve,
                    std::size_t workers = 1);

/// Forward substitution: w[0] = g[0], w[i] = g[i] + Phi(w[i-1]).
void sequential_solve(const NetworkTopology& topo, LevelState& level);

/// One full cycle (two-level, V, or F per the hierarchy) on the current
/// state, without touching the initial guess or convergence bookkeeping.
void run_cycle(const NetworkTopology& topo, Hierarchy& h,
               std::size_t workers = 1);

/// Geometric-average convergence rate (|r_k|/|r_0|)^(1/k); nullopt when
/// fewer than two norms are present or r_0 is zero.
std::optional<double> conv_rate(const std::vector<double>& residual_norms);

/** Iterate cycles from the standard initial guess (w[0] = g[0] = seeded
 * init, all other points zero) until |r| <= tol_coefficient * sqrt(N0)
 * or max_iters is reached. */
ConvergenceReport solve(const NetworkTopology& topo, Hierarchy& h,
                        const SolverParams& params);

/// Text checkpoint: one line per step, index then s values at 17
/// significant digits.
void write_checkpoint(std::ostream& os,
                      const std::vector<WeightVector>& solution);

} // namespace mgritnn

#endif
