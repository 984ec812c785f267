#include "mgritnn/dataset.hpp"

#include "mgritnn/rng.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mgritnn {

Batch Dataset::full_batch() const {
    Batch b;
    b.rows = size();
    b.x_cols = x_cols;
    b.y_cols = y_cols;
    b.X.reserve(b.rows * x_cols);
    b.Y.reserve(b.rows * y_cols);
    for (std::size_t k = 0; k < size(); ++k) {
        b.X.insert(b.X.end(), x[k].begin(), x[k].end());
        b.Y.insert(b.Y.end(), y[k].begin(), y[k].end());
    }
    return b;
}

Batch Dataset::single(std::size_t k) const {
    if (k >= size()) throw std::out_of_range("instance index out of range");
    Batch b;
    b.rows = 1;
    b.x_cols = x_cols;
    b.y_cols = y_cols;
    b.X = x[k];
    b.Y = y[k];
    return b;
}

Dataset xor_dataset() {
    Dataset ds;
    ds.name = "xor";
    ds.x_cols = 3;
    ds.y_cols = 1;
    ds.x = {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}};
    ds.y = {{0}, {1}, {1}, {0}};
    return ds;
}

Dataset binary_addition_dataset(std::uint64_t seed, std::size_t count,
                                std::size_t bits) {
    if (count < 1 || bits < 1)
        throw std::invalid_argument("binary addition dataset needs count >= 1, bits >= 1");
    Dataset ds;
    ds.name = "binadd";
    ds.x_cols = 2 * bits;
    ds.y_cols = bits;
    ds.x.resize(count);
    ds.y.resize(count);
    Rng rng(seed);
    const std::uint64_t half = std::uint64_t{1} << (bits - 1);
    for (std::size_t k = 0; k < count; ++k) {
        const std::uint64_t a = rng.next_below(half);
        const std::uint64_t b = rng.next_below(half);
        const std::uint64_t sum = a + b;
        auto& xr = ds.x[k];
        auto& yr = ds.y[k];
        xr.resize(2 * bits);
        yr.resize(bits);
        for (std::size_t d = 0; d < bits; ++d) {
            // most significant digit first
            const std::size_t shift = bits - 1 - d;
            xr[d] = static_cast<double>((a >> shift) & 1);
            xr[bits + d] = static_cast<double>((b >> shift) & 1);
            yr[d] = static_cast<double>((sum >> shift) & 1);
        }
    }
    return ds;
}

std::uint64_t decode_bits(const std::vector<double>& digits,
                          std::size_t begin, std::size_t len) {
    std::uint64_t v = 0;
    for (std::size_t d = 0; d < len; ++d) {
        const double x = digits.at(begin + d);
        if (x != 0.0 && x != 1.0)
            throw std::invalid_argument("non-binary digit");
        v = (v << 1) | static_cast<std::uint64_t>(x);
    }
    return v;
}

void write_dataset_csv(std::ostream& os, const Dataset& ds) {
    for (std::size_t c = 0; c < ds.x_cols; ++c) os << "x_" << c << ",";
    for (std::size_t c = 0; c < ds.y_cols; ++c)
        os << "y_" << c << (c + 1 < ds.y_cols ? "," : "\n");
    for (std::size_t k = 0; k < ds.size(); ++k) {
        for (double v : ds.x[k]) os << v << ",";
        for (std::size_t c = 0; c < ds.y_cols; ++c)
            os << ds.y[k][c] << (c + 1 < ds.y_cols ? "," : "\n");
    }
}

Dataset read_dataset_csv(std::istream& is, const std::string& name) {
    Dataset ds;
    ds.name = name;
    std::string line;
    if (!std::getline(is, line))
        throw std::invalid_argument("dataset csv: missing header");
    std::size_t x_cols = 0, y_cols = 0;
    {
        std::stringstream hs(line);
        std::string cell;
        while (std::getline(hs, cell, ',')) {
            if (cell.rfind("x_", 0) == 0)
                ++x_cols;
            else if (cell.rfind("y_", 0) == 0)
                ++y_cols;
            else
                throw std::invalid_argument("dataset csv: bad header cell '" + cell + "'");
        }
    }
    if (x_cols == 0 || y_cols == 0)
        throw std::invalid_argument("dataset csv: header must name x_ and y_ columns");
    ds.x_cols = x_cols;
    ds.y_cols = y_cols;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::string cell;
        std::vector<double> vals;
        while (std::getline(ls, cell, ','))
            vals.push_back(std::stod(cell));
        if (vals.size() != x_cols + y_cols)
            throw std::invalid_argument("dataset csv: row width mismatch");
        ds.x.emplace_back(vals.begin(), vals.begin() + static_cast<long>(x_cols));
        ds.y.emplace_back(vals.begin() + static_cast<long>(x_cols), vals.end());
    }
    return ds;
}

} // namespace mgritnn
