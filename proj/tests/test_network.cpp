#include "mgritnn/network.hpp"
#include "mgritnn/oracle.hpp"
#include "mgritnn/rng.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>

using namespace mgritnn;

namespace {

// Independent 3-4-1 reference: a line-by-line transcription of the
// classic numpy XOR training script, written against fixed-size arrays so
// it shares nothing with the library's generic forward/backprop path.
struct Ref341 {
    double syn0[3][4];
    double syn1[4][1];

    void load(const WeightVector& w) {
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 4; ++q) syn0[p][q] = w[p * 4 + q];
        for (int p = 0; p < 4; ++p) syn1[p][0] = w[12 + p];
    }
    WeightVector flat() const {
        WeightVector w(16);
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 4; ++q) w[p * 4 + q] = syn0[p][q];
        for (int p = 0; p < 4; ++p) w[12 + p] = syn1[p][0];
        return w;
    }

    static double nonlin(double x) { return 1.0 / (1.0 + std::exp(-x)); }

    void one_pass(double alpha, double l1_out[4][4], double l2_out[4][1]) {
        const double X[4][3] = {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}};
        const double y[4][1] = {{0}, {1}, {1}, {0}};
        double l1[4][4], l2[4][1];
        for (int r = 0; r < 4; ++r)
            for (int q = 0; q < 4; ++q) {
                double acc = 0;
                for (int p = 0; p < 3; ++p) acc += X[r][p] * syn0[p][q];
                l1[r][q] = nonlin(acc);
            }
        for (int r = 0; r < 4; ++r) {
            double acc = 0;
            for (int q = 0; q < 4; ++q) acc += l1[r][q] * syn1[q][0];
            l2[r][0] = nonlin(acc);
        }
        double l2_delta[4][1];
        for (int r = 0; r < 4; ++r)
            l2_delta[r][0] = (y[r][0] - l2[r][0]) * l2[r][0] * (1 - l2[r][0]);
        double l1_delta[4][4];
        for (int r = 0; r < 4; ++r)
            for (int q = 0; q < 4; ++q) {
                const double l1_error = l2_delta[r][0] * syn1[q][0];
                l1_delta[r][q] = l1_error * l1[r][q] * (1 - l1[r][q]);
            }
        for (int q = 0; q < 4; ++q) {
            double acc = 0;
            for (int r = 0; r < 4; ++r) acc += l1[r][q] * l2_delta[r][0];
            syn1[q][0] += alpha * acc;
        }
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 4; ++q) {
                double acc = 0;
                for (int r = 0; r < 4; ++r) acc += X[r][p] * l1_delta[r][q];
                syn0[p][q] += alpha * acc;
            }
        if (l1_out)
            for (int r = 0; r < 4; ++r)
                for (int q = 0; q < 4; ++q) l1_out[r][q] = l1[r][q];
        if (l2_out)
            for (int r = 0; r < 4; ++r) l2_out[r][0] = l2[r][0];
    }
};

WeightVector random_weights(const NetworkTopology& topo, Rng& rng) {
    WeightVector w(topo.weight_count());
    for (double& v : w) v = 2.0 * rng.next_double() - 1.0;
    return w;
}

} // namespace

TEST_CASE("sigmoid values") {
    CHECK(sigmoid(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(sigmoid(10.0) == doctest::Approx(1.0 / (1.0 + std::exp(-10.0))).epsilon(1e-15));
    CHECK(sigmoid(-10.0) == doctest::Approx(1.0 - sigmoid(10.0)).epsilon(1e-12));
    for (double v : {-3.0, -0.5, 0.1, 2.0})
        CHECK(sigmoid(v) < sigmoid(v + 0.25));
}

TEST_CASE("sigmoid derivative from activation") {
    CHECK(sigmoid_deriv_from_activation(0.5) == 0.25);
    CHECK(sigmoid_deriv_from_activation(0.0) == 0.0);
    CHECK(sigmoid_deriv_from_activation(1.0) == 0.0);
}

TEST_CASE("topology weight counts") {
    CHECK(NetworkTopology({3, 4, 1}).weight_count() == 16);
    CHECK(NetworkTopology({24, 128, 64, 12}).weight_count() == 12032);
    CHECK_THROWS_AS((NetworkTopology({5})), std::invalid_argument);
    CHECK_THROWS_AS((NetworkTopology({3, 0, 1})), std::invalid_argument);
}

TEST_CASE("forward: zero weights give 0.5 everywhere past the input") {
    const NetworkTopology topo({3, 4, 1});
    const WeightVector w(16, 0.0);
    const Batch z = xor_dataset().full_batch();
    const Activations act = forward(topo, w, z.X, z.rows);
    REQUIRE(act.layers.size() == 3);
    CHECK(act.output().size() == 4);
    for (std::size_t j = 1; j < act.layers.size(); ++j)
        for (double a : act.layers[j]) CHECK(a == 0.5);
}

TEST_CASE("forward rejects shape mismatches") {
    const NetworkTopology topo({3, 4, 1});
    const WeightVector w(16, 0.0);
    CHECK_THROWS_AS((forward(topo, w, std::vector<double>(9, 0.0), 4)),
                    std::invalid_argument);
    CHECK_THROWS_AS((forward(topo, WeightVector(15, 0.0),
                            std::vector<double>(12, 0.0), 4)),
                    std::invalid_argument);
}

TEST_CASE("forward matches the 3-4-1 reference pass") {
    const NetworkTopology topo({3, 4, 1});
    const WeightVector w = init_weights(topo, 1);
    const Batch z = xor_dataset().full_batch();
    const Activations act = forward(topo, w, z.X, z.rows);

    Ref341 ref;
    ref.load(w);
    double l1[4][4], l2[4][1];
    ref.one_pass(1.0, l1, l2);
    for (int r = 0; r < 4; ++r) {
        for (int q = 0; q < 4; ++q)
            CHECK(act.layers[1][r * 4 + q] == doctest::Approx(l1[r][q]).epsilon(1e-12));
        CHECK(act.layers[2][r] == doctest::Approx(l2[r][0]).epsilon(1e-12));
    }
}

TEST_CASE("phi_step matches one reference training pass") {
    const NetworkTopology topo({3, 4, 1});
    const WeightVector w = init_weights(topo, 1);
    const Batch z = xor_dataset().full_batch();
    const WeightVector next = phi_step(topo, w, z, 1.0);

    Ref341 ref;
    ref.load(w);
    ref.one_pass(1.0, nullptr, nullptr);
    const WeightVector expect = ref.flat();
    for (std::size_t t = 0; t < 16; ++t)
        CHECK(next[t] == doctest::Approx(expect[t]).epsilon(1e-12));
}

TEST_CASE("gradient is zero at a perfect fit") {
    // with y := out(w), the error and thus every delta vanishes
    const NetworkTopology topo({3, 4, 1});
    const WeightVector w = init_weights(topo, 7);
    Batch z = xor_dataset().full_batch();
    z.Y = forward(topo, w, z.X, z.rows).output();
    for (double gval : gradient_direction(topo, w, z)) CHECK(gval == 0.0);
}

TEST_CASE("gradient matches central finite differences of -E") {
    const NetworkTopology topo({3, 4, 1});
    const Batch z = xor_dataset().full_batch();
    Rng rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        const WeightVector w = random_weights(topo, rng);
        const WeightVector grad = gradient_direction(topo, w, z);
        CHECK(gradient_check(topo, w, z, grad) < 1e-6);
    }
}

TEST_CASE("batch gradient is the sum of per-instance gradients") {
    const NetworkTopology topo({3, 4, 1});
    const Dataset ds = xor_dataset();
    const WeightVector w = init_weights(topo, 3);
    const WeightVector batch_grad = gradient_direction(topo, w, ds.full_batch());
    WeightVector summed(16, 0.0);
    for (std::size_t k = 0; k < ds.size(); ++k) {
        const WeightVector gk = gradient_direction(topo, w, ds.single(k));
        for (std::size_t t = 0; t < 16; ++t) summed[t] += gk[t];
    }
    for (std::size_t t = 0; t < 16; ++t)
        CHECK(batch_grad[t] == doctest::Approx(summed[t]).epsilon(1e-12));
}

TEST_CASE("phi_step is linear in alpha and identity at alpha = 0") {
    const NetworkTopology topo({3, 4, 1});
    const WeightVector w = init_weights(topo, 5);
    const Batch z = xor_dataset().full_batch();
    CHECK(phi_step(topo, w, z, 0.0) == w);
    const WeightVector w1 = phi_step(topo, w, z, 0.7);
    const WeightVector w2 = phi_step(topo, w, z, 1.4);
    for (std::size_t t = 0; t < 16; ++t)
        CHECK(w2[t] - w[t] == doctest::Approx(2.0 * (w1[t] - w[t])).epsilon(1e-12));
}

TEST_CASE("init_weights: range, determinism, length") {
    const NetworkTopology topo({3, 4, 1});
    const WeightVector a = init_weights(topo, 1);
    const WeightVector b = init_weights(topo, 1);
    const WeightVector c = init_weights(topo, 2);
    CHECK(a.size() == 16);
    CHECK(a == b);
    CHECK(a != c);
    for (double v : a) {
        CHECK(v >= -1.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("60000 sequential steps train XOR below 0.01 mean error") {
    const NetworkTopology topo({3, 4, 1});
    const Dataset ds = xor_dataset();
    const Batch z = ds.full_batch();
    WeightVector w = init_weights(topo, 1);
    for (int i = 0; i < 60000; ++i) w = phi_step(topo, w, z, 1.0);
    CHECK(mean_abs_error(topo, w, z) < 0.01);
}
