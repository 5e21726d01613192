#include "jastrow1d/energy_kernels.hpp"

#include "jastrow1d/errors.hpp"
#include "point_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace jastrow1d::kernels {

void GridSums::add(double log_weight, const std::array<double, 3> &values) {
    if (log_weight < log_max + kLogWeightFloor) {
        return;
    }
    if (log_weight > log_max) {
        const double scale = std::exp(log_max - log_weight);
        norm *= scale;
        for (double &m : moments) {
            m *= scale;
        }
        log_max = log_weight;
    }
    const double w = std::exp(log_weight - log_max);
    norm += w;
    for (int j = 0; j < 3; ++j) {
        moments[j] += w * values[j];
    }
}

void GridSums::merge(const GridSums &other) {
    if (other.norm == 0.0) {
        return;
    }
    if (norm == 0.0) {
        *this = other;
        return;
    }
    if (other.log_max > log_max) {
        const double scale = std::exp(log_max - other.log_max);
        norm = norm * scale + other.norm;
        for (int j = 0; j < 3; ++j) {
            moments[j] = moments[j] * scale + other.moments[j];
        }
        log_max = other.log_max;
    } else {
        const double scale = std::exp(other.log_max - log_max);
        norm += other.norm * scale;
        for (int j = 0; j < 3; ++j) {
            moments[j] += other.moments[j] * scale;
        }
    }
}

double GridSums::log_total() const { return norm > 0.0 ? log_max + std::log(norm) : -INFINITY; }

std::size_t TensorGrid::size() const {
    std::size_t n = 1;
    for (const auto &d : nodes) {
        n *= d.size();
    }
    return nodes.empty() ? 0 : n;
}

double TensorGrid::point(std::size_t flat, std::span<double> coords) const {
    double lw = 0.0;
    for (int d = dims() - 1; d >= 0; --d) {
        const std::size_t n = nodes[d].size();
        const std::size_t i = flat % n;
        flat /= n;
        coords[d] = nodes[d][i];
        lw += log_weights[d][i];
    }
    return lw;
}

TensorGrid hermite_grid(const QuadratureRule &gh, int dims) {
    std::vector<double> lw(gh.nodes.size());
    for (std::size_t i = 0; i < lw.size(); ++i) {
        lw[i] = std::log(gh.weights[i]) + gh.nodes[i] * gh.nodes[i];
    }
    TensorGrid grid;
    grid.nodes.assign(dims, gh.nodes);
    grid.log_weights.assign(dims, lw);
    return grid;
}

PhiKernel::PhiKernel(const TwoBodySolution &sol) : size_(sol.coeffs.size()) {
    const std::size_t m = size_;
    value_coeff_ = sol.coeffs;
    value_coeff_.push_back(0.0);
    deriv_coeff_.assign(m + 1, 0.0);
    energy_coeff_.assign(m + 1, 0.0);
    for (std::size_t k = 0; k <= m; ++k) {
        const double kk = static_cast<double>(k);
        const double above = k + 1 < m ? value_coeff_[k + 1] * std::sqrt(0.5 * (kk + 1.0)) : 0.0;
        const double below = k > 0 ? value_coeff_[k - 1] * std::sqrt(0.5 * kk) : 0.0;
        deriv_coeff_[k] = above - below;
        energy_coeff_[k] = value_coeff_[k] * (2.0 * kk + 1.0);
    }
    up_.assign(m + 1, 0.0);
    down_.assign(m + 1, 0.0);
    for (std::size_t k = 0; k <= m; ++k) {
        const double kk = static_cast<double>(k);
        up_[k] = std::sqrt(2.0 / (kk + 1.0));
        down_[k] = std::sqrt(kk / (kk + 1.0));
    }
}

PhiKernel::Value PhiKernel::operator()(double x) const {
    // p_k = chi_k(x) exp(x^2/2)
    double prev = 0.0;
    double cur = 0.75112554446494248286; // pi^{-1/4}
    double p = 0.0;
    double d = 0.0;
    double e = 0.0;
    for (std::size_t k = 0; k <= size_; ++k) {
        p += value_coeff_[k] * cur;
        d += deriv_coeff_[k] * cur;
        e += energy_coeff_[k] * cur;
        const double next = x * up_[k] * cur - down_[k] * prev;
        prev = cur;
        cur = next;
    }
    if (p == 0.0) {
        return {-INFINITY, 0, 0.0, 0.0};
    }
    return {-0.5 * x * x + std::log(std::abs(p)), p > 0.0 ? 1 : -1, d / p, x * x - e / p};
}

QuadratureRule pair_radial_rule(const JastrowAnsatz &ansatz) {
    const int n = ansatz.particles();
    const int m = ansatz.pair_solution().basis_size;
    const double alpha = ansatz.alpha();
    // Along r, psi^2 ~ poly(r) * exp(-kappa r^2) with kappa = 1 - (1 - alpha^2) N / 2.
    const double kappa = 1.0 - (1.0 - alpha * alpha) * 0.5 * n;
    const double degree = static_cast<double>(m - 1) * n * (n - 1);
    const auto h = [&](double r) { return degree * std::log(r) - kappa * r * r; };
    const double peak = std::sqrt(std::max(1.0, degree / (2.0 * kappa)));
    double length = peak;
    while (h(length) > h(peak) - 50.0) {
        length += 0.25;
    }
    length = std::max(length, (std::sqrt(2.0 * m + 1.0) + 9.0) / alpha);
    const Interaction &inter = ansatz.interaction();
    const double core = inter.uses_range() ? inter.range / std::numbers::sqrt2 : 1.0;
    return graded_half_line_rule(core, length, 16);
}

GridSums kinetic_sums(const JastrowAnsatz &ansatz, const QuadratureRule &gh, double reference, Backend backend) {
    const PhiKernel phi(ansatz.pair_solution());
    const Interaction &inter = ansatz.interaction();
    const detail::KineticPoint fn{phi, inter, ansatz.particles(), ansatz.alpha(), reference,
                                  inter.kind != InteractionKind::contact};
    const TensorGrid grid = hermite_grid(gh, ansatz.particles());
    return backend == Backend::serial ? detail::kinetic_sums_serial(grid, fn) : detail::kinetic_sums_parallel(grid, fn);
}

GridSums pair_potential_sums(const JastrowAnsatz &ansatz, const QuadratureRule &gh, const QuadratureRule &radial,
                             Backend backend) {
    const int n = ansatz.particles();
    const PhiKernel phi(ansatz.pair_solution());
    const detail::PairPotentialPoint fn{phi, ansatz.interaction(), n, ansatz.alpha(), 0.5 * n * (n - 1)};
    TensorGrid grid = hermite_grid(gh, n);
    grid.nodes[0] = radial.nodes;
    grid.log_weights[0].resize(radial.nodes.size());
    for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
        // psi^2 is even in r
        grid.log_weights[0][i] = std::log(2.0 * radial.weights[i]);
    }
    return backend == Backend::serial ? detail::pair_potential_sums_serial(grid, fn)
                                      : detail::pair_potential_sums_parallel(grid, fn);
}

GridSums coincidence_sums(const JastrowAnsatz &ansatz, const QuadratureRule &gh, Backend backend) {
    const PhiKernel phi(ansatz.pair_solution());
    const detail::CoincidencePoint fn{phi, ansatz.particles(), ansatz.alpha()};
    const TensorGrid grid = hermite_grid(gh, ansatz.particles() - 1);
    return backend == Backend::serial ? detail::coincidence_sums_serial(grid, fn)
                                      : detail::coincidence_sums_parallel(grid, fn);
}

} // namespace jastrow1d::kernels
