#include "mgritnn/perf_model.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace mgritnn;

TEST_CASE("sigma_v closed form") {
    CHECK(sigma_v(2, 1) == 17);
    CHECK(sigma_v(5, 1) == 41);
    CHECK(sigma_v(2, 6) == 102);
    CHECK_THROWS_AS((sigma_v(1, 1)), std::invalid_argument);
    CHECK_THROWS_AS((sigma_v(3, 0)), std::invalid_argument);
}

TEST_CASE("sigma_v is affine in L and linear in niter") {
    for (std::size_t L = 2; L < 10; ++L) {
        CHECK(sigma_v(L + 1, 1) - sigma_v(L, 1) == 8);
        for (std::size_t n = 1; n < 5; ++n)
            CHECK(sigma_v(L, n) == n * sigma_v(L, 1));
    }
}

TEST_CASE("sigma_f closed form") {
    CHECK(sigma_f(3, 1) == 17);
    CHECK(sigma_f(4, 2) == 84);
    CHECK(sigma_f(2, 5) == 85); // two-level F-cycle is a V-cycle
    CHECK_THROWS_AS((sigma_f(1, 1)), std::invalid_argument);
    for (std::size_t L = 3; L < 10; ++L)
        for (std::size_t n = 1; n < 5; ++n)
            CHECK(sigma_f(L, n) == n * sigma_f(L, 1));
}

TEST_CASE("potential speedup") {
    CHECK(potential_speedup(170, 17) == 10.0);
    CHECK(potential_speedup(25600, sigma_v(2, 5)) ==
          doctest::Approx(25600.0 / 85.0).epsilon(1e-12));
    // strictly increasing in N0 at fixed sigma
    double prev = 0.0;
    for (std::size_t n0 : {100, 200, 400, 800}) {
        const double sp = potential_speedup(n0, 41);
        CHECK(sp > prev);
        prev = sp;
    }
    CHECK_THROWS_AS((potential_speedup(100, 0)), std::invalid_argument);
}
