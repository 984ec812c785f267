#include "mgritnn/perf_model.hpp"

#include <stdexcept>

namespace mgritnn {

std::size_t sigma_v(std::size_t levels, std::size_t niter,
                    const CostModelParams& params) {
    if (levels < 2) throw std::invalid_argument("sigma_v requires L >= 2");
    if (niter < 1) throw std::invalid_argument("sigma_v requires niter >= 1");
    const std::size_t per_cycle = params.level0_cost + params.coarsest_cost +
                                  params.coarser_cost * (levels - 2);
    return niter * per_cycle;
}

std::size_t sigma_f(std::size_t levels, std::size_t niter,
                    const CostModelParams& params) {
    if (levels < 2) throw std::invalid_argument("sigma_f requires L >= 2");
    if (levels == 2) return sigma_v(2, niter, params);
    std::size_t per_cycle = 0;
    for (std::size_t j = 2; j <= levels - 1; ++j)
        per_cycle += sigma_v(j, 1, params);
    return niter * per_cycle;
}

double potential_speedup(std::size_t n0, std::size_t sigma) {
    if (sigma == 0) throw std::invalid_argument("sigma must be positive");
    return static_cast<double>(n0) / static_cast<double>(sigma);
}

} // namespace mgritnn
