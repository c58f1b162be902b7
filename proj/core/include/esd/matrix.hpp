#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace esd {

/// Dense row-major matrix of 64-bit reals. The runtime currency of every
/// layer, loss and batch in the library.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    std::size_t size() const { return data.size(); }
    bool empty() const { return data.empty(); }
    bool same_shape(const Matrix& other) const {
        return rows == other.rows && cols == other.cols;
    }

    static Matrix zeros_like(const Matrix& m) { return Matrix(m.rows, m.cols); }
};

bool all_finite(const Matrix& m);
bool bit_equal(const Matrix& a, const Matrix& b);

/// "[r x c]" for diagnostics.
std::string shape_str(const Matrix& m);

} // namespace esd
