#pragma once

#include <span>
#include <vector>

namespace jastrow1d {

/// Nodes and weights of a one-dimensional quadrature rule. Gauss-Hermite rules
/// integrate against exp(-x^2); panel rules integrate plain functions.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    int order() const { return static_cast<int>(nodes.size()); }
};

/// Number of harmonic-oscillator orbitals, indices 0..size-1.
class OscillatorBasis {
  public:
    explicit OscillatorBasis(int size);
    int size() const { return size_; }

  private:
    int size_;
};

inline constexpr int kMaxHermiteOrder = 512;

/// Gauss-Hermite rule of the given order (1..512) for weight exp(-x^2).
/// Nodes ascend and are exactly antisymmetric. For orders above ~370 the
/// outermost weights fall below the double range and are flushed to zero.
QuadratureRule gauss_hermite_rule(int order);

/// Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre_rule(int order);

/// Composite Gauss-Legendre rule on [0, length] whose panels start at
/// `core_width` next to the origin and grow geometrically up to unit width.
/// Resolves integrands that are smooth on (0, length] but vary on the scale
/// `core_width` near 0.
QuadratureRule graded_half_line_rule(double core_width, double length, int points_per_panel = 16);

/// Normalized oscillator eigenfunction chi_n(x) = (2^n n! sqrt(pi))^{-1/2} H_n(x) exp(-x^2/2).
double ho_eigenfunction(int n, double x);

/// chi_0(x) .. chi_{out.size()-1}(x) via the normalized three-term recurrence.
void ho_orbitals(double x, std::span<double> out);

struct OrbitalValue {
    double value;
    double d1;
    double d2;
};

/// chi_n and its first two derivatives.
OrbitalValue ho_derivatives(int n, double x);

} // namespace jastrow1d
