#include "jastrow1d/jastrow.hpp"

#include "jastrow1d/energy_kernels.hpp"
#include "jastrow1d/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace jastrow1d {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kAlphaSlack = 1e-6;

void check_config(const JastrowAnsatz &ansatz, std::span<const double> config) {
    if (static_cast<int>(config.size()) != ansatz.particles()) {
        throw InvalidArgument("configuration has " + std::to_string(config.size()) + " coordinates, expected " +
                              std::to_string(ansatz.particles()));
    }
}

struct Derivatives {
    double trap = 0.0;
    double kinetic = 0.0;
    double potential = 0.0;
};

Derivatives local_terms(const JastrowAnsatz &ansatz, std::span<const double> x, bool with_potential) {
    const int n = ansatz.particles();
    double grad[kMaxParticles];
    double lap[kMaxParticles];
    Derivatives out;
    for (int k = 0; k < n; ++k) {
        out.trap += 0.5 * x[k] * x[k];
        grad[k] = -x[k];
        lap[k] = -1.0;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const PairFactor f = pair_log_factor(ansatz, (x[i] - x[j]) * kInvSqrt2);
            grad[i] += kInvSqrt2 * f.ratio1;
            grad[j] -= kInvSqrt2 * f.ratio1;
            const double l = 0.5 * (f.ratio2 - f.ratio1 * f.ratio1);
            lap[i] += l;
            lap[j] += l;
            if (with_potential) {
                out.potential += potential_value(ansatz.interaction(), x[i] - x[j]);
            }
        }
    }
    for (int k = 0; k < n; ++k) {
        out.kinetic -= 0.5 * (lap[k] + grad[k] * grad[k]);
    }
    return out;
}

} // namespace

double JastrowAnsatz::alpha_squared_bound(int particles) { return 1.0 - 2.0 / particles; }

JastrowAnsatz::JastrowAnsatz(int particles, Statistics statistics, double alpha, TwoBodySolution pair_solution)
    : particles_(particles), statistics_(statistics), alpha_(alpha), pair_(std::move(pair_solution)) {
    if (particles < kMinParticles || particles > kMaxParticles) {
        throw InvalidArgument("particle count must be in [2, 4], got " + std::to_string(particles));
    }
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw InvalidArgument("alpha must be a positive number");
    }
    if (alpha * alpha <= alpha_squared_bound(particles) + kAlphaSlack) {
        throw InvalidArgument("alpha = " + std::to_string(alpha) + " is at or below the normalizability bound sqrt(" +
                              std::to_string(alpha_squared_bound(particles)) + ")");
    }
    if (pair_.parity != parity_for(statistics)) {
        throw InvalidArgument("pair solution parity does not match the particle statistics");
    }
    if (pair_.coeffs.empty()) {
        throw InvalidArgument("pair solution has no coefficients");
    }
}

PairFactor pair_log_factor(const JastrowAnsatz &ansatz, double u) {
    const kernels::PhiKernel phi(ansatz.pair_solution());
    const double alpha = ansatz.alpha();
    const auto v = phi(alpha * u);
    if (v.sign == 0) {
        throw NodeSingularity("pair factor vanishes at u = " + std::to_string(u));
    }
    PairFactor f;
    f.log_abs = 0.5 * u * u + v.log_abs;
    f.sign = v.sign;
    f.ratio1 = u + alpha * v.ratio1;
    f.ratio2 = 1.0 + u * u + 2.0 * alpha * u * v.ratio1 + alpha * alpha * v.ratio2;
    return f;
}

LogPsi log_psi(const JastrowAnsatz &ansatz, std::span<const double> config) {
    check_config(ansatz, config);
    const kernels::PhiKernel phi(ansatz.pair_solution());
    const int n = ansatz.particles();
    LogPsi out{0.0, 1};
    for (int k = 0; k < n; ++k) {
        out.log_abs -= 0.5 * config[k] * config[k];
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double u = (config[i] - config[j]) * kInvSqrt2;
            const auto v = phi(ansatz.alpha() * u);
            if (v.sign == 0) {
                return {-std::numeric_limits<double>::infinity(), 0};
            }
            out.log_abs += 0.5 * u * u + v.log_abs;
            out.sign *= v.sign;
        }
    }
    return out;
}

double local_energy(const JastrowAnsatz &ansatz, std::span<const double> config) {
    check_config(ansatz, config);
    if (ansatz.interaction().kind == InteractionKind::contact) {
        throw InvalidArgument("local energy is undefined for a contact interaction");
    }
    const Derivatives d = local_terms(ansatz, config, true);
    return d.trap + d.kinetic + d.potential;
}

double kinetic_local_energy(const JastrowAnsatz &ansatz, std::span<const double> config) {
    check_config(ansatz, config);
    const Derivatives d = local_terms(ansatz, config, false);
    return d.trap + d.kinetic;
}

EnergyEstimate energy_at_order(const JastrowAnsatz &ansatz, int quad_order, Backend backend) {
    if (quad_order < 10 || quad_order > kMaxHermiteOrder) {
        throw InvalidArgument("quadrature order must be in [10, 512], got " + std::to_string(quad_order));
    }
    const int n = ansatz.particles();
    const double alpha = ansatz.alpha();
    if (alpha * alpha <= JastrowAnsatz::alpha_squared_bound(n) + kAlphaSlack) {
        throw InvalidArgument("alpha outside the normalizability bound");
    }
    const Interaction &inter = ansatz.interaction();
    const bool pointwise = inter.kind != InteractionKind::contact;
    const QuadratureRule gh = gauss_hermite_rule(quad_order);

    // Shift for the variance accumulator: the local energy at a fixed spread-out configuration.
    double reference = 0.0;
    {
        double probe[kMaxParticles];
        for (int k = 0; k < n; ++k) {
            probe[k] = 0.61 * (k - 0.5 * (n - 1)) + 0.01 * k * k;
        }
        try {
            const std::span<const double> cfg(probe, n);
            reference = pointwise ? local_energy(ansatz, cfg) : kinetic_local_energy(ansatz, cfg);
        } catch (const NodeSingularity &) {
            reference = 0.0;
        }
    }

    const kernels::GridSums kin = kernels::kinetic_sums(ansatz, gh, reference, backend);
    if (!(kin.norm > 0.0)) {
        throw NumericalFailure("normalization integral of psi^2 vanished on the quadrature grid");
    }

    EnergyEstimate est;
    est.quad_order = quad_order;
    est.kinetic = kin.mean(0);
    est.log_norm = kin.log_total();
    if (pointwise) {
        const double shift = kin.mean(1);
        est.variance = std::max(0.0, kin.mean(2) - shift * shift);
    }

    switch (inter.kind) {
    case InteractionKind::none:
        est.interaction = 0.0;
        break;
    case InteractionKind::contact: {
        // <sum delta(x_i - x_j)> = C(N,2) / sqrt(2) * (integral of psi^2 on x_1 = x_2) / (integral of psi^2)
        const kernels::GridSums slice = kernels::coincidence_sums(ansatz, gh, backend);
        const double ratio = slice.norm > 0.0 ? std::exp(slice.log_total() - est.log_norm) : 0.0;
        est.interaction = 0.5 * n * (n - 1) * inter.strength * kInvSqrt2 * ratio;
        break;
    }
    default: {
        const kernels::GridSums pot =
            kernels::pair_potential_sums(ansatz, gh, kernels::pair_radial_rule(ansatz), backend);
        if (!(pot.norm > 0.0)) {
            throw NumericalFailure("normalization integral vanished on the pair-coordinate grid");
        }
        est.interaction = pot.mean(0);
        break;
    }
    }
    est.energy = est.kinetic + est.interaction;
    if (!std::isfinite(est.energy)) {
        throw NumericalFailure("energy estimate is not finite");
    }
    return est;
}

EnergyEstimate energy_expectation(const JastrowAnsatz &ansatz, int quad_order, Backend backend) {
    if (quad_order < 20) {
        throw InvalidArgument("energy_expectation needs quadrature order >= 20, got " + std::to_string(quad_order));
    }
    EnergyEstimate est = energy_at_order(ansatz, quad_order, backend);
    const EnergyEstimate coarse = energy_at_order(ansatz, quad_order / 2, backend);
    est.convergence_delta = std::abs(est.energy - coarse.energy);
    return est;
}

} // namespace jastrow1d
