#pragma once

#include "jastrow1d/twobody.hpp"
#include "jastrow1d/types.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace jastrow1d {

inline constexpr int kMinParticles = 2;
inline constexpr int kMaxParticles = 4;

/// psi(x_1..x_N) = prod_k exp(-x_k^2/2) prod_{i<j} f((x_i - x_j)/sqrt(2)),
/// f(u) = exp(u^2/2) phi(alpha u), with phi the relative two-body ground state.
/// Immutable once built.
class JastrowAnsatz {
  public:
    JastrowAnsatz(int particles, Statistics statistics, double alpha, TwoBodySolution pair_solution);

    int particles() const { return particles_; }
    Statistics statistics() const { return statistics_; }
    double alpha() const { return alpha_; }
    const TwoBodySolution &pair_solution() const { return pair_; }
    const Interaction &interaction() const { return pair_.interaction; }

    JastrowAnsatz with_alpha(double alpha) const { return {particles_, statistics_, alpha, pair_}; }

    /// psi^2 is normalizable iff alpha^2 > 1 - 2/N.
    static double alpha_squared_bound(int particles);

  private:
    int particles_;
    Statistics statistics_;
    double alpha_;
    TwoBodySolution pair_;
};

struct PairFactor {
    double log_abs; // log|f(u)|
    int sign;
    double ratio1; // f'/f
    double ratio2; // f''/f
};

/// Throws NodeSingularity when phi(alpha u) vanishes exactly.
PairFactor pair_log_factor(const JastrowAnsatz &ansatz, double u);

struct LogPsi {
    double log_abs; // -infinity on a node
    int sign;       // 0 on a node
};

LogPsi log_psi(const JastrowAnsatz &ansatz, std::span<const double> config);

/// (H psi)/psi including the pair potential. Throws NodeSingularity on nodes
/// and InvalidArgument for contact interactions (no pointwise potential).
double local_energy(const JastrowAnsatz &ansatz, std::span<const double> config);

/// Kinetic plus trap part of the local energy; defined for every interaction kind.
double kinetic_local_energy(const JastrowAnsatz &ansatz, std::span<const double> config);

enum class Backend { serial, parallel };

struct EnergyEstimate {
    double energy = 0.0;
    double kinetic = 0.0;     // <T + trap>
    double interaction = 0.0; // <sum V>
    double log_norm = 0.0;    // log of the Gauss-Hermite estimate of the integral of psi^2
    std::optional<double> variance; // psi^2-weighted variance of the local energy (pointwise kinds only)
    int quad_order = 0;
    double convergence_delta = 0.0; // |E(order) - E(order/2)|

    bool converged() const { return convergence_delta <= 1e-6; }
};

/// Ratio of quadratures <psi|H|psi>/<psi|psi>. Requires quad_order >= 20.
EnergyEstimate energy_expectation(const JastrowAnsatz &ansatz, int quad_order, Backend backend = Backend::parallel);

/// Single energy evaluation without the half-order convergence check (quad_order >= 10).
EnergyEstimate energy_at_order(const JastrowAnsatz &ansatz, int quad_order, Backend backend = Backend::parallel);

struct ScanPoint {
    double alpha;
    EnergyEstimate estimate;
};

struct ScanResult {
    std::vector<ScanPoint> points;
    double alpha_star = 0.0;
    double energy_star = 0.0;
    bool boundary_minimum = false;
    bool unimodal = true;
    std::vector<std::string> warnings;
};

/// Uniform alpha grid, grid minimum, then golden-section refinement on the
/// bracketing interval to |d alpha| < 1e-4.
ScanResult scan_alpha(const JastrowAnsatz &prototype, double alpha_min, double alpha_max, int steps, int quad_order,
                      Backend backend = Backend::parallel);

/// Smallest admissible scan start: sqrt(max(0, 1 - 2/N)) + 1e-3.
double minimum_scan_alpha(int particles);

} // namespace jastrow1d
