#pragma once

#include "jastrow1d/energy_kernels.hpp"
#include "jastrow1d/interaction.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <span>

namespace jastrow1d::kernels::detail {

inline constexpr double kInvSqrt2 = 0.70710678118654752440;

struct PairTerms {
    double log_abs;
    int sign;
    double ratio1;     // f'/f
    double laplacian;  // f''/f - (f'/f)^2
};

inline PairTerms pair_terms(const PhiKernel &phi, double alpha, double u) {
    const PhiKernel::Value v = phi(alpha * u);
    PairTerms t;
    t.log_abs = 0.5 * u * u + v.log_abs;
    t.sign = v.sign;
    t.ratio1 = u + alpha * v.ratio1;
    t.laplacian = 1.0 + alpha * alpha * (v.ratio2 - v.ratio1 * v.ratio1);
    return t;
}

struct KineticPoint {
    const PhiKernel &phi;
    const Interaction &interaction;
    int particles;
    double alpha;
    double reference;
    bool pointwise;

    bool operator()(std::span<const double> x, double &log_psi2, std::array<double, 3> &values) const {
        std::array<double, kMaxParticles> grad{};
        std::array<double, kMaxParticles> lap{};
        double log_psi = 0.0;
        double trap = 0.0;
        double potential = 0.0;
        for (int k = 0; k < particles; ++k) {
            log_psi -= 0.5 * x[k] * x[k];
            trap += 0.5 * x[k] * x[k];
            grad[k] = -x[k];
            lap[k] = -1.0;
        }
        for (int i = 0; i < particles; ++i) {
            for (int j = i + 1; j < particles; ++j) {
                const PairTerms t = pair_terms(phi, alpha, (x[i] - x[j]) * kInvSqrt2);
                if (t.sign == 0) {
                    return false;
                }
                log_psi += t.log_abs;
                grad[i] += kInvSqrt2 * t.ratio1;
                grad[j] -= kInvSqrt2 * t.ratio1;
                lap[i] += 0.5 * t.laplacian;
                lap[j] += 0.5 * t.laplacian;
                if (pointwise) {
                    potential += potential_value(interaction, x[i] - x[j]);
                }
            }
        }
        double kinetic = 0.0;
        for (int k = 0; k < particles; ++k) {
            kinetic -= 0.5 * (lap[k] + grad[k] * grad[k]);
        }
        const double e_kin = trap + kinetic;
        const double shifted = e_kin + potential - reference;
        log_psi2 = 2.0 * log_psi;
        values = {e_kin, shifted, shifted * shifted};
        return std::isfinite(log_psi2);
    }
};

inline double log_psi_only(const PhiKernel &phi, int particles, double alpha, std::span<const double> x, int &sign) {
    double log_psi = 0.0;
    sign = 1;
    for (int k = 0; k < particles; ++k) {
        log_psi -= 0.5 * x[k] * x[k];
    }
    for (int i = 0; i < particles; ++i) {
        for (int j = i + 1; j < particles; ++j) {
            const double u = (x[i] - x[j]) * kInvSqrt2;
            const PhiKernel::Value v = phi(alpha * u);
            if (v.sign == 0) {
                sign = 0;
                return -INFINITY;
            }
            sign *= v.sign;
            log_psi += 0.5 * u * u + v.log_abs;
        }
    }
    return log_psi;
}

// Coordinates (r, s, x_3, ..): x_1 = (s + r)/sqrt(2), x_2 = (s - r)/sqrt(2).
struct PairPotentialPoint {
    const PhiKernel &phi;
    const Interaction &interaction;
    int particles;
    double alpha;
    double pair_count;

    bool operator()(std::span<const double> y, double &log_psi2, std::array<double, 3> &values) const {
        std::array<double, kMaxParticles> x{};
        x[0] = (y[1] + y[0]) * kInvSqrt2;
        x[1] = (y[1] - y[0]) * kInvSqrt2;
        for (int k = 2; k < particles; ++k) {
            x[k] = y[k];
        }
        int sign = 0;
        const double lp = log_psi_only(phi, particles, alpha, std::span<const double>(x.data(), particles), sign);
        if (sign == 0) {
            return false;
        }
        log_psi2 = 2.0 * lp;
        values = {pair_count * potential_value(interaction, std::numbers::sqrt2 * y[0]), 0.0, 0.0};
        return true;
    }
};

// Coordinates (s, x_3, ..) on the hyperplane x_1 = x_2 = s/sqrt(2).
struct CoincidencePoint {
    const PhiKernel &phi;
    int particles;
    double alpha;

    bool operator()(std::span<const double> y, double &log_psi2, std::array<double, 3> &values) const {
        std::array<double, kMaxParticles> x{};
        x[0] = y[0] * kInvSqrt2;
        x[1] = y[0] * kInvSqrt2;
        for (int k = 2; k < particles; ++k) {
            x[k] = y[k - 1];
        }
        int sign = 0;
        const double lp = log_psi_only(phi, particles, alpha, std::span<const double>(x.data(), particles), sign);
        if (sign == 0) {
            return false;
        }
        log_psi2 = 2.0 * lp;
        values = {1.0, 0.0, 0.0};
        return true;
    }
};

GridSums kinetic_sums_serial(const TensorGrid &grid, const KineticPoint &fn);
GridSums kinetic_sums_parallel(const TensorGrid &grid, const KineticPoint &fn);
GridSums pair_potential_sums_serial(const TensorGrid &grid, const PairPotentialPoint &fn);
GridSums pair_potential_sums_parallel(const TensorGrid &grid, const PairPotentialPoint &fn);
GridSums coincidence_sums_serial(const TensorGrid &grid, const CoincidencePoint &fn);
GridSums coincidence_sums_parallel(const TensorGrid &grid, const CoincidencePoint &fn);

} // namespace jastrow1d::kernels::detail
