#ifndef MGRITNN_SCHEDULES_HPP
#define MGRITNN_SCHEDULES_HPP

#include "mgritnn/dataset.hpp"

#include <cstddef>
#include <string>

namespace mgritnn {

/** Level-dependent learning rate: either constant, or geometric growth
 * factor^level * base capped at a maximum. */
struct AlphaSchedule {
    enum class Kind { Constant, Geometric };
    Kind kind = Kind::Constant;
    double base = 1.0;
    double cap = 1.0;
    double factor = 2.0;

    static AlphaSchedule constant(double base);
    static AlphaSchedule geometric(double base, double cap, double factor = 2.0);

    double at(std::size_t level) const;
};

/** How a training step picks its data: the whole set every step, or one
 * instance per step, serialized round-robin as mod(i, K). */
struct TrainingPolicy {
    enum class Kind { Batch, Serialized };
    Kind kind = Kind::Batch;

    Batch batch_at(const Dataset& ds, std::size_t step) const;
};

/** A named solver configuration from the experiments. */
struct SolverPreset {
    std::string name;
    AlphaSchedule alpha;
    TrainingPolicy policy;
    std::size_t m = 2;
    double tol_coefficient = 1e-9;
    std::size_t max_iters = 50;
};

/// Lookup by CLI name: naive, solver1, solver2, solver2-slow, solver3-alias.
/// Throws std::invalid_argument for unknown names.  alpha_b/alpha_max
/// override the preset's defaults when >= 0.
SolverPreset make_preset(const std::string& name, double alpha_b = -1.0,
                         double alpha_max = -1.0);

} // namespace mgritnn

#endif
