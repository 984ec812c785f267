#ifndef MGRITNN_TOPOLOGY_HPP
#define MGRITNN_TOPOLOGY_HPP

#include <cstddef>
#include <vector>

namespace mgritnn {

/// Flattened weights of a fully connected network, layer-major, each
/// inter-layer matrix stored row-major with shape n[j] x n[j+1].
using WeightVector = std::vector<double>;

/** Layer widths of a fully connected feedforward network. */
class NetworkTopology {
  public:
    explicit NetworkTopology(std::vector<std::size_t> layer_widths);

    const std::vector<std::size_t>& layer_widths() const { return widths_; }
    std::size_t layer_count() const { return widths_.size(); }
    std::size_t input_width() const { return widths_.front(); }
    std::size_t output_width() const { return widths_.back(); }

    /// Total weight count s = sum_j n[j]*n[j+1].
    std::size_t weight_count() const { return weight_count_; }

    /// Offset of the layer-j weight matrix inside a WeightVector.
    std::size_t matrix_offset(std::size_t j) const { return offsets_[j]; }

  private:
    std::vector<std::size_t> widths_;
    std::vector<std::size_t> offsets_;
    std::size_t weight_count_;
};

} // namespace mgritnn

#endif
