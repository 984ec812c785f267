#ifndef MGRITNN_ORACLE_HPP
#define MGRITNN_ORACLE_HPP

#include "mgritnn/dataset.hpp"
#include "mgritnn/mgrit.hpp"
#include "mgritnn/schedules.hpp"
#include "mgritnn/topology.hpp"

#include <cstdint>
#include <vector>

namespace mgritnn {

struct EquivalenceResult {
    double max_abs_diff = 0.0;
    std::size_t at_step = 0;
    double tolerance = 0.0;
    bool passed = false;
};

/** The sequential training trajectory: N propagator applications starting
 * from the seeded init, with the step's batch chosen by the policy. */
std::vector<WeightVector> sequential_reference(const NetworkTopology& topo,
                                               const Dataset& data,
                                               const TrainingPolicy& policy,
                                               double alpha, std::size_t n_steps,
                                               std::uint64_t seed);

/** Max-abs difference between a converged solve and the sequential
 * trajectory over every step and component.  Refuses non-converged
 * reports. */
EquivalenceResult check_mgrit_equivalence(
    const ConvergenceReport& report,
    const std::vector<WeightVector>& reference, double tolerance);

/** Two-level reduction-exactness check: with the coarse propagator taken
 * as the exact m-fold composition of the fine one, a single iteration must
 * reproduce the sequential solution at all C-points. */
EquivalenceResult exactness_check(std::size_t n0, std::size_t m,
                                  const NetworkTopology& topo,
                                  const Dataset& data,
                                  const TrainingPolicy& policy, double alpha,
                                  std::uint64_t seed, double tolerance = 1e-10);

/** Relative accuracy of a gradient against central finite differences of
 * -E; returns the worst relative error over all components, with
 * denominator max(1, |g|). */
double gradient_check(const NetworkTopology& topo, const WeightVector& w,
                      const Batch& z, const WeightVector& gradient,
                      double fd_step = 1e-6);

/// Half squared error E(w) = 1/2 sum |y - out|^2 over the batch.
double half_squared_error(const NetworkTopology& topo, const WeightVector& w,
                          const Batch& z);

} // namespace mgritnn

#endif
