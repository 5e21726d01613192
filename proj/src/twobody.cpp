#include "jastrow1d/twobody.hpp"

#include "jastrow1d/errors.hpp"
#include "jastrow1d/oscillator.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace jastrow1d {

namespace {

void check_basis(int basis_size) {
    if (basis_size < 2 || basis_size > kMaxRelativeBasis) {
        throw InvalidArgument("relative basis size must be in [2, 64], got " + std::to_string(basis_size));
    }
}

} // namespace

Matrix relative_hamiltonian(const Interaction &inter, int basis_size, const QuadratureRule &rule) {
    check_basis(basis_size);
    Matrix h = potential_matrix(inter, basis_size, rule, std::numbers::sqrt2);
    for (int n = 0; n < basis_size; ++n) {
        h(n, n) += n + 0.5;
    }
    return h;
}

Matrix relative_hamiltonian(const Interaction &inter, int basis_size) {
    check_basis(basis_size);
    return relative_hamiltonian(inter, basis_size, matrix_element_rule(inter, basis_size, std::numbers::sqrt2));
}

TwoBodySolution solve_relative(const Interaction &inter, int basis_size, Parity parity) {
    const Matrix full = relative_hamiltonian(inter, basis_size);
    const int first = parity == Parity::even ? 0 : 1;
    std::vector<int> index;
    for (int n = first; n < basis_size; n += 2) {
        index.push_back(n);
    }
    const std::size_t k = index.size();
    Matrix sub = Matrix::square(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            sub(i, j) = full(index[i], index[j]);
        }
    }
    const SymmetricEigen eig = jacobi_eigensolve(sub);

    // Degenerate ground level: prefer the vector with most weight on the lowest orbital.
    std::size_t pick = 0;
    for (std::size_t r = 1; r < k && std::abs(eig.values[r] - eig.values[0]) < 1e-12; ++r) {
        if (std::abs(eig.vectors(r, 0)) > std::abs(eig.vectors(pick, 0))) {
            pick = r;
        }
    }

    TwoBodySolution sol;
    sol.energy = eig.values[pick];
    sol.parity = parity;
    sol.interaction = inter;
    sol.basis_size = basis_size;
    sol.coeffs.assign(basis_size, 0.0);
    double norm = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        norm += eig.vectors(pick, i) * eig.vectors(pick, i);
    }
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < k; ++i) {
        sol.coeffs[index[i]] = eig.vectors(pick, i) / norm;
    }

    const double orientation = parity == Parity::even ? eval_phi(sol, 0.1).phi : sol.coeffs[1];
    if (orientation < 0.0) {
        for (double &c : sol.coeffs) {
            c = -c;
        }
    }

    std::vector<double> sub_vec(k);
    for (std::size_t i = 0; i < k; ++i) {
        sub_vec[i] = sol.coeffs[index[i]];
    }
    sol.residual = eigen_residual(sub, sub_vec, sol.energy);
    return sol;
}

PhiValue eval_phi(const TwoBodySolution &sol, double x) {
    const std::size_t m = sol.coeffs.size();
    double chi[kMaxRelativeBasis + 1];
    ho_orbitals(x, std::span<double>(chi, m + 1));
    double phi = 0.0;
    double dphi = 0.0;
    double second = 0.0;
    for (std::size_t n = 0; n < m; ++n) {
        const double c = sol.coeffs[n];
        if (c == 0.0) {
            continue;
        }
        const double nn = static_cast<double>(n);
        const double lower = n > 0 ? std::sqrt(0.5 * nn) * chi[n - 1] : 0.0;
        phi += c * chi[n];
        dphi += c * (lower - std::sqrt(0.5 * (nn + 1.0)) * chi[n + 1]);
        second += c * (x * x - 2.0 * nn - 1.0) * chi[n];
    }
    return {phi, dphi, second};
}

} // namespace jastrow1d
