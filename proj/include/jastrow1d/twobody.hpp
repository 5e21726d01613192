#pragma once

#include "jastrow1d/interaction.hpp"
#include "jastrow1d/linalg.hpp"
#include "jastrow1d/types.hpp"

#include <vector>

namespace jastrow1d {

inline constexpr int kMaxRelativeBasis = 64;

// Ground state of the relative two-particle problem
//   (-1/2 d^2/dx^2 + x^2/2 + V(sqrt(2) x)) phi = E phi
// within one parity sector, expanded in oscillator orbitals.
struct TwoBodySolution {
    std::vector<double> coeffs; // length basis_size; wrong-parity entries are exactly 0
    double energy = 0.0;
    Parity parity = Parity::even;
    Interaction interaction;
    int basis_size = 0;
    double residual = 0.0; // eigen-residual in the parity sub-basis
};

/// H_mn = (n + 1/2) delta_mn + <m|V(sqrt(2) x)|n>, basis size in [2, 64].
Matrix relative_hamiltonian(const Interaction &inter, int basis_size);
Matrix relative_hamiltonian(const Interaction &inter, int basis_size, const QuadratureRule &rule);

/// Lowest eigenpair in the requested parity sector. Orientation: phi(0.1) > 0
/// for even solutions, coefficient of chi_1 > 0 for odd ones.
TwoBodySolution solve_relative(const Interaction &inter, int basis_size, Parity parity);

struct PhiValue {
    double phi;
    double dphi;
    double d2phi;
};

PhiValue eval_phi(const TwoBodySolution &sol, double x);

} // namespace jastrow1d
