#ifndef MGRITNN_PERF_MODEL_HPP
#define MGRITNN_PERF_MODEL_HPP

#include <cstddef>

namespace mgritnn {

/** Sequential-propagator counts per cycle: 7 on the finest level, 8 on
 * each middle level, about 10 on the coarsest. */
struct CostModelParams {
    std::size_t level0_cost = 7;
    std::size_t coarser_cost = 8;
    std::size_t coarsest_cost = 10;
};

/// Dominant sequential propagator count for niter V-cycles over L levels:
/// niter * (17 + 8 * (L - 2)) with the default costs.
std::size_t sigma_v(std::size_t levels, std::size_t niter,
                    const CostModelParams& params = {});

/// F-cycle variant: niter * sum of single-cycle sigma_v(j) for j = 2..L-1;
/// a two-level F-cycle degenerates to the V-cycle count.
std::size_t sigma_f(std::size_t levels, std::size_t niter,
                    const CostModelParams& params = {});

/// Potential speedup N0 / sigma against sequential training.
double potential_speedup(std::size_t n0, std::size_t sigma);

} // namespace mgritnn

#endif
