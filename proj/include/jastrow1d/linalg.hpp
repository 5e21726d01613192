#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace jastrow1d {

// Dense row-major matrix. Sizes here never exceed a few hundred.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix square(std::size_t n) { return Matrix(n, n); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    const std::vector<double> &data() const { return data_; }

    friend bool operator==(const Matrix &, const Matrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

double max_abs_asymmetry(const Matrix &a);

struct SymmetricEigen {
    std::vector<double> values; // ascending
    Matrix vectors;             // row k holds the eigenvector of values[k]
    int sweeps = 0;
};

/// Cyclic Jacobi diagonalization of a symmetric matrix. Converged when the
/// off-diagonal Frobenius norm drops below tol * max(1, ||A||_F).
/// Throws NumericalFailure after max_sweeps.
SymmetricEigen jacobi_eigensolve(const Matrix &a, double tol = 1e-12, int max_sweeps = 100);

/// max_i |(A v)_i - lambda v_i|
double eigen_residual(const Matrix &a, std::span<const double> v, double lambda);

} // namespace jastrow1d
