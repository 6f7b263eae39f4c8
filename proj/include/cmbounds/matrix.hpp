#ifndef CMBOUNDS_MATRIX_HPP
#define CMBOUNDS_MATRIX_HPP

#include <cstddef>
#include <vector>

namespace cmbounds {

// Minimal dense row-major matrix. All instances in this library are small
// (J x J covariances) or square on markets (M x M weights / distances).
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    double* row(std::size_t i) { return data.data() + i * cols; }
    const double* row(std::size_t i) const { return data.data() + i * cols; }

    bool square() const { return rows == cols; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
    }
};

}  // namespace cmbounds

#endif
