#include "jastrow1d/linalg.hpp"

#include "jastrow1d/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace jastrow1d {

double max_abs_asymmetry(const Matrix &a) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            worst = std::max(worst, std::abs(a(i, j) - a(j, i)));
        }
    }
    return worst;
}

namespace {

double off_diagonal_norm(const Matrix &a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            s += 2.0 * a(i, j) * a(i, j);
        }
    }
    return std::sqrt(s);
}

double frobenius_norm(const Matrix &a) {
    double s = 0.0;
    for (double v : a.data()) {
        s += v * v;
    }
    return std::sqrt(s);
}

} // namespace

SymmetricEigen jacobi_eigensolve(const Matrix &input, double tol, int max_sweeps) {
    if (input.rows() != input.cols()) {
        throw InvalidArgument("jacobi_eigensolve: matrix is not square");
    }
    const std::size_t n = input.rows();
    Matrix a = input;
    // Rows of v accumulate the transposed rotation product, so row k ends up
    // as the k-th eigenvector.
    Matrix v = Matrix::square(n);
    for (std::size_t i = 0; i < n; ++i) {
        v(i, i) = 1.0;
    }
    const double threshold = tol * std::max(1.0, frobenius_norm(a));

    int sweep = 0;
    bool converged = off_diagonal_norm(a) < threshold;
    while (!converged) {
        if (sweep >= max_sweeps) {
            throw NumericalFailure("Jacobi eigensolver did not converge in " + std::to_string(max_sweeps) + " sweeps");
        }
        ++sweep;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) {
                    continue;
                }
                const double app = a(p, p);
                const double aqq = a(q, q);
                // Skip rotations that would not change the diagonal in double precision.
                if (sweep > 4 && std::abs(apq) < 1e-300 + 1e-18 * (std::abs(app) + std::abs(aqq))) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                const double theta = 0.5 * (aqq - app) / apq;
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) {
                        continue;
                    }
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    const double new_kp = c * akp - s * akq;
                    const double new_kq = s * akp + c * akq;
                    a(k, p) = new_kp;
                    a(p, k) = new_kp;
                    a(k, q) = new_kq;
                    a(q, k) = new_kq;
                }
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                auto vp = v.row(p);
                auto vq = v.row(q);
                for (std::size_t k = 0; k < n; ++k) {
                    const double xp = vp[k];
                    const double xq = vq[k];
                    vp[k] = c * xp - s * xq;
                    vq[k] = s * xp + c * xq;
                }
            }
        }
        converged = off_diagonal_norm(a) < threshold;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    SymmetricEigen out;
    out.sweeps = sweep;
    out.values.resize(n);
    out.vectors = Matrix::square(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]);
        std::copy(v.row(order[k]).begin(), v.row(order[k]).end(), out.vectors.row(k).begin());
    }
    return out;
}

double eigen_residual(const Matrix &a, std::span<const double> v, double lambda) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        const auto r = a.row(i);
        for (std::size_t j = 0; j < a.cols(); ++j) {
            s += r[j] * v[j];
        }
        worst = std::max(worst, std::abs(s - lambda * v[i]));
    }
    return worst;
}

} // namespace jastrow1d
