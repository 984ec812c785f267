#ifndef MGRITNN_NETWORK_HPP
#define MGRITNN_NETWORK_HPP

#include "mgritnn/dataset.hpp"
#include "mgritnn/topology.hpp"

#include <cstdint>
#include <vector>

namespace mgritnn {

double sigmoid(double v);

/// Derivative of the sigmoid expressed through its own output: a*(1-a).
double sigmoid_deriv_from_activation(double a);

/** Per-layer activations of one forward pass; layer j is a rows x n[j]
 * row-major matrix, layer 0 being the input itself. */
struct Activations {
    std::size_t rows = 0;
    std::vector<std::vector<double>> layers;

    const std::vector<double>& output() const { return layers.back(); }
};

/// Evaluate the network on `rows` input rows (row-major, rows x n[0]).
Activations forward(const NetworkTopology& topo, const WeightVector& w,
                    const std::vector<double>& X, std::size_t rows);

/** Backpropagation descent direction for the batch, i.e. -grad E(w) with
 * E = 1/2 sum_k |y_k - out_k|^2.  All layer deltas are formed from the
 * incoming weights; nothing is updated in place. */
WeightVector gradient_direction(const NetworkTopology& topo,
                                const WeightVector& w, const Batch& z);

/// One training step: w + alpha * gradient_direction(w, z).
WeightVector phi_step(const NetworkTopology& topo, const WeightVector& w,
                      const Batch& z, double alpha);

/// Seeded initial weights, each component uniform in [-1, 1).
WeightVector init_weights(const NetworkTopology& topo, std::uint64_t seed);

/// Mean absolute difference between network outputs and batch targets.
double mean_abs_error(const NetworkTopology& topo, const WeightVector& w,
                      const Batch& z);

} // namespace mgritnn

#endif
