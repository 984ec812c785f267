#include "mgritnn/dataset.hpp"

#include <doctest.h>

#include <stdexcept>

#include <sstream>

using namespace mgritnn;

TEST_CASE("xor dataset matches the model problem") {
    const Dataset ds = xor_dataset();
    REQUIRE(ds.size() == 4);
    CHECK(ds.x[1] == std::vector<double>{0, 1, 1});
    CHECK(ds.y[1] == std::vector<double>{1});
    CHECK(ds.x[0] == std::vector<double>{0, 0, 1});
    CHECK(ds.y[3] == std::vector<double>{0});
    // flattened batch: 4*3 inputs + 4*1 targets = 16 values
    const Batch z = ds.full_batch();
    CHECK(z.X.size() + z.Y.size() == 16);
}

TEST_CASE("binary addition instances decode to exact sums") {
    const Dataset ds = binary_addition_dataset(9, 64, 12);
    REQUIRE(ds.size() == 64);
    CHECK(ds.x_cols == 24);
    CHECK(ds.y_cols == 12);
    for (std::size_t k = 0; k < ds.size(); ++k) {
        const auto a = decode_bits(ds.x[k], 0, 12);
        const auto b = decode_bits(ds.x[k], 12, 12);
        const auto sum = decode_bits(ds.y[k], 0, 12);
        CHECK(a + b == sum);
        CHECK(a < 2048);
        CHECK(b < 2048);
    }
}

TEST_CASE("binary addition is deterministic per seed") {
    const Dataset a = binary_addition_dataset(5, 20, 8);
    const Dataset b = binary_addition_dataset(5, 20, 8);
    const Dataset c = binary_addition_dataset(6, 20, 8);
    CHECK(a.x == b.x);
    CHECK(a.y == b.y);
    CHECK(a.x != c.x);
}

TEST_CASE("dataset csv round-trips") {
    for (const Dataset& ds :
         {xor_dataset(), binary_addition_dataset(3, 10, 12)}) {
        std::stringstream ss;
        write_dataset_csv(ss, ds);
        const Dataset back = read_dataset_csv(ss, ds.name);
        CHECK(back.x_cols == ds.x_cols);
        CHECK(back.y_cols == ds.y_cols);
        CHECK(back.x == ds.x);
        CHECK(back.y == ds.y);
    }
}

TEST_CASE("csv import rejects malformed input") {
    std::stringstream bad_header("a,b\n1,2\n");
    CHECK_THROWS_AS((read_dataset_csv(bad_header, "x")), std::invalid_argument);
    std::stringstream short_row("x_0,x_1,y_0\n1,0\n");
    CHECK_THROWS_AS((read_dataset_csv(short_row, "x")), std::invalid_argument);
}
