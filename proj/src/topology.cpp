#include "mgritnn/topology.hpp"

#include <stdexcept>
#include <utility>

namespace mgritnn {

NetworkTopology::NetworkTopology(std::vector<std::size_t> layer_widths)
    : widths_(std::move(layer_widths)) {
    if (widths_.size() < 2)
        throw std::invalid_argument("topology needs at least 2 layers");
    for (std::size_t w : widths_)
        if (w < 1) throw std::invalid_argument("layer width must be >= 1");
    offsets_.resize(widths_.size() - 1);
    std::size_t off = 0;
    for (std::size_t j = 0; j + 1 < widths_.size(); ++j) {
        offsets_[j] = off;
        off += widths_[j] * widths_[j + 1];
    }
    weight_count_ = off;
}

} // namespace mgritnn
