#include "mgritnn/network.hpp"

#include "mgritnn/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace mgritnn {

double sigmoid(double v) { return 1.0 / (1.0 + std::exp(-v)); }

double sigmoid_deriv_from_activation(double a) { return a * (1.0 - a); }

namespace {

void check_batch(const NetworkTopology& topo, const Batch& z) {
    if (z.rows < 1) throw std::invalid_argument("batch is empty");
    if (z.x_cols != topo.input_width() || z.y_cols != topo.output_width())
        throw std::invalid_argument("batch shape does not match topology");
    if (z.X.size() != z.rows * z.x_cols || z.Y.size() != z.rows * z.y_cols)
        throw std::invalid_argument("batch storage size mismatch");
}

void check_weights(const NetworkTopology& topo, const WeightVector& w) {
    if (w.size() != topo.weight_count())
        throw std::invalid_argument("weight vector length mismatch");
}

} // namespace

Activations forward(const NetworkTopology& topo, const WeightVector& w,
                    const std::vector<double>& X, std::size_t rows) {
    check_weights(topo, w);
    if (X.size() != rows * topo.input_width())
        throw std::invalid_argument("input matrix shape mismatch");
    const auto& n = topo.layer_widths();
    Activations act;
    act.rows = rows;
    act.layers.resize(n.size());
    act.layers[0] = X;
    for (std::size_t j = 0; j + 1 < n.size(); ++j) {
        const std::size_t in = n[j], out = n[j + 1];
        const double* W = w.data() + topo.matrix_offset(j); // in x out
        const auto& a = act.layers[j];
        auto& next = act.layers[j + 1];
        next.assign(rows * out, 0.0);
        for (std::size_t r = 0; r < rows; ++r) {
            const double* ar = a.data() + r * in;
            double* nr = next.data() + r * out;
            for (std::size_t p = 0; p < in; ++p) {
                const double av = ar[p];
                const double* Wp = W + p * out;
                for (std::size_t q = 0; q < out; ++q) nr[q] += av * Wp[q];
            }
            for (std::size_t q = 0; q < out; ++q) nr[q] = sigmoid(nr[q]);
        }
    }
    return act;
}

WeightVector gradient_direction(const NetworkTopology& topo,
                                const WeightVector& w, const Batch& z) {
    check_batch(topo, z);
    Activations act = forward(topo, w, z.X, z.rows);
    const auto& n = topo.layer_widths();
    const std::size_t L = n.size();
    const std::size_t rows = z.rows;

    // delta at the output layer: (y - out) .* out .* (1 - out)
    std::vector<double> delta(rows * n[L - 1]);
    {
        const auto& out = act.layers[L - 1];
        for (std::size_t t = 0; t < delta.size(); ++t) {
            const double e = z.Y[t] - out[t];
            delta[t] = e * sigmoid_deriv_from_activation(out[t]);
        }
    }

    WeightVector dir(topo.weight_count(), 0.0);
    for (std::size_t j = L - 1; j-- > 0;) {
        const std::size_t in = n[j], out = n[j + 1];
        const auto& a = act.layers[j];
        double* D = dir.data() + topo.matrix_offset(j); // in x out
        // D = a^T * delta
        for (std::size_t r = 0; r < rows; ++r) {
            const double* ar = a.data() + r * in;
            const double* dr = delta.data() + r * out;
            for (std::size_t p = 0; p < in; ++p) {
                double* Dp = D + p * out;
                const double av = ar[p];
                for (std::size_t q = 0; q < out; ++q) Dp[q] += av * dr[q];
            }
        }
        if (j == 0) break;
        // propagate: prev_delta = (delta * W^T) .* a .* (1 - a)
        const double* W = w.data() + topo.matrix_offset(j);
        std::vector<double> prev(rows * in, 0.0);
        for (std::size_t r = 0; r < rows; ++r) {
            const double* dr = delta.data() + r * out;
            double* pr = prev.data() + r * in;
            for (std::size_t p = 0; p < in; ++p) {
                const double* Wp = W + p * out;
                double acc = 0.0;
                for (std::size_t q = 0; q < out; ++q) acc += dr[q] * Wp[q];
                pr[p] = acc * sigmoid_deriv_from_activation(a[r * in + p]);
            }
        }
        delta.swap(prev);
    }
    return dir;
}

WeightVector phi_step(const NetworkTopology& topo, const WeightVector& w,
                      const Batch& z, double alpha) {
    WeightVector dir = gradient_direction(topo, w, z);
    WeightVector next(w.size());
    for (std::size_t t = 0; t < w.size(); ++t) next[t] = w[t] + alpha * dir[t];
    return next;
}

WeightVector init_weights(const NetworkTopology& topo, std::uint64_t seed) {
    Rng rng(seed);
    WeightVector w(topo.weight_count());
    for (double& v : w) v = 2.0 * rng.next_double() - 1.0;
    return w;
}

double mean_abs_error(const NetworkTopology& topo, const WeightVector& w,
                      const Batch& z) {
    check_batch(topo, z);
    Activations act = forward(topo, w, z.X, z.rows);
    const auto& out = act.output();
    double sum = 0.0;
    for (std::size_t t = 0; t < out.size(); ++t)
        sum += std::abs(z.Y[t] - out[t]);
    return sum / static_cast<double>(out.size());
}

} // namespace mgritnn
