#pragma once

// Grid reductions behind energy_expectation(). Each integral is available as a
// serial reference loop and as an OpenMP kernel; the OpenMP kernel reduces
// fixed-size chunks in index order, so its result does not depend on the
// thread count.

#include "jastrow1d/jastrow.hpp"
#include "jastrow1d/oscillator.hpp"

#include <array>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace jastrow1d::kernels {

inline constexpr std::size_t kChunkSize = 2048;
// exp(-645) ~ 1e-280: points this far below the running maximum are dropped.
inline constexpr double kLogWeightFloor = -645.0;

/// Streaming log-sum-exp accumulator for sum_i exp(lw_i) * v_i.
struct GridSums {
    double log_max = -std::numeric_limits<double>::infinity();
    double norm = 0.0;              // sum exp(lw - log_max)
    std::array<double, 3> moments{}; // sum exp(lw - log_max) * v_j

    void add(double log_weight, const std::array<double, 3> &values);
    void merge(const GridSums &other);

    double log_total() const; // log of sum exp(lw)
    double mean(int j) const { return moments[j] / norm; }
};

/// Tensor product of 1-D rules; log_weights already include any e^{+x^2}
/// de-weighting. Flat index runs with the last dimension fastest.
struct TensorGrid {
    std::vector<std::vector<double>> nodes;
    std::vector<std::vector<double>> log_weights;

    std::size_t size() const;
    int dims() const { return static_cast<int>(nodes.size()); }
    double point(std::size_t flat, std::span<double> coords) const; // returns the log weight
};

TensorGrid hermite_grid(const QuadratureRule &gh, int dims);

/// Fast evaluation of log|phi(x)| and the ratios phi'/phi, phi''/phi using
/// Gaussian-free Hermite recurrences (no underflow for large |x|).
class PhiKernel {
  public:
    explicit PhiKernel(const TwoBodySolution &sol);

    struct Value {
        double log_abs;
        int sign;
        double ratio1;
        double ratio2;
    };
    Value operator()(double x) const;

  private:
    std::size_t size_;
    std::vector<double> value_coeff_;
    std::vector<double> deriv_coeff_;
    std::vector<double> energy_coeff_;
    std::vector<double> up_;
    std::vector<double> down_;
};

/// Grid for <T + trap>: values {E_kin, E_L - ref, (E_L - ref)^2}.
GridSums kinetic_sums(const JastrowAnsatz &ansatz, const QuadratureRule &gh, double reference, Backend backend);

/// Rotated grid (r, s, x_3..) with r = (x_1 - x_2)/sqrt(2) on a graded panel
/// rule; values {C(N,2) V(sqrt(2) r), 0, 0}.
GridSums pair_potential_sums(const JastrowAnsatz &ansatz, const QuadratureRule &gh, const QuadratureRule &radial,
                             Backend backend);

/// Slice x_1 = x_2 over the remaining N-1 coordinates; values {1, 0, 0}.
GridSums coincidence_sums(const JastrowAnsatz &ansatz, const QuadratureRule &gh, Backend backend);

/// Radial panel rule for pair_potential_sums covering the decay of psi^2 in r.
QuadratureRule pair_radial_rule(const JastrowAnsatz &ansatz);

} // namespace jastrow1d::kernels
