#ifndef MGRITNN_DATASET_HPP
#define MGRITNN_DATASET_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mgritnn {

/** One training batch: K input rows and K target rows. */
struct Batch {
    std::size_t rows = 0;   // K
    std::size_t x_cols = 0; // n[0]
    std::size_t y_cols = 0; // n[L-1]
    std::vector<double> X;  // rows x x_cols, row-major
    std::vector<double> Y;  // rows x y_cols, row-major
};

/** A named list of (x, y) training instances. */
struct Dataset {
    std::string name;
    std::size_t x_cols = 0;
    std::size_t y_cols = 0;
    std::vector<std::vector<double>> x; // one row per instance
    std::vector<std::vector<double>> y;

    std::size_t size() const { return x.size(); }

    /// Batch over all instances.
    Batch full_batch() const;
    /// Batch containing only instance k.
    Batch single(std::size_t k) const;
};

/// The four XOR instances of the three-layer model problem.
Dataset xor_dataset();

/** Random binary-addition instances: two `bits`-digit numbers as input,
 * their sum as output, most significant digit first.  Operands are drawn
 * in [0, 2^(bits-1)) so the sum always fits in `bits` digits. */
Dataset binary_addition_dataset(std::uint64_t seed, std::size_t count,
                                std::size_t bits);

/// Decode a binary digit row (MSB first) to an integer; digits must be 0/1.
std::uint64_t decode_bits(const std::vector<double>& digits,
                          std::size_t begin, std::size_t len);

/// CSV export: header row x_0..,y_0.., one instance per row.
void write_dataset_csv(std::ostream& os, const Dataset& ds);
/// CSV import, inverse of write_dataset_csv.
Dataset read_dataset_csv(std::istream& is, const std::string& name);

} // namespace mgritnn

#endif
