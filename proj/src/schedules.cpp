#include "mgritnn/schedules.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mgritnn {

AlphaSchedule AlphaSchedule::constant(double base) {
    AlphaSchedule s;
    s.kind = Kind::Constant;
    s.base = base;
    s.cap = base;
    return s;
}

AlphaSchedule AlphaSchedule::geometric(double base, double cap, double factor) {
    AlphaSchedule s;
    s.kind = Kind::Geometric;
    s.base = base;
    s.cap = cap;
    s.factor = factor;
    return s;
}

double AlphaSchedule::at(std::size_t level) const {
    if (kind == Kind::Constant) return base;
    return std::min(std::pow(factor, static_cast<double>(level)) * base, cap);
}

Batch TrainingPolicy::batch_at(const Dataset& ds, std::size_t step) const {
    if (kind == Kind::Batch) return ds.full_batch();
    return ds.single(step % ds.size());
}

SolverPreset make_preset(const std::string& name, double alpha_b,
                         double alpha_max) {
    SolverPreset p;
    p.name = name;
    if (name == "naive") {
        p.alpha = AlphaSchedule::constant(alpha_b >= 0 ? alpha_b : 1.0);
        p.policy.kind = TrainingPolicy::Kind::Batch;
    } else if (name == "solver1") {
        p.alpha = AlphaSchedule::geometric(alpha_b >= 0 ? alpha_b : 1.0,
                                           alpha_max >= 0 ? alpha_max : 8.0, 2.0);
        p.policy.kind = TrainingPolicy::Kind::Batch;
    } else if (name == "solver2") {
        p.alpha = AlphaSchedule::geometric(alpha_b >= 0 ? alpha_b : 1.0,
                                           alpha_max >= 0 ? alpha_max : 8.0, 2.0);
        p.policy.kind = TrainingPolicy::Kind::Serialized;
    } else if (name == "solver2-slow") {
        p.alpha = AlphaSchedule::geometric(alpha_b >= 0 ? alpha_b : 1.0,
                                           alpha_max >= 0 ? alpha_max : 8.0, 1.25);
        p.policy.kind = TrainingPolicy::Kind::Serialized;
    } else if (name == "solver3-alias") {
        // serialized solver with the slow-growth-friendly rate pair
        p.alpha = AlphaSchedule::geometric(alpha_b >= 0 ? alpha_b : 0.1,
                                           alpha_max >= 0 ? alpha_max : 30.0, 2.0);
        p.policy.kind = TrainingPolicy::Kind::Serialized;
    } else {
        throw std::invalid_argument("unknown preset '" + name + "'");
    }
    return p;
}

} // namespace mgritnn
