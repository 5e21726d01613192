#include "jastrow1d/errors.hpp"
#include "jastrow1d/jastrow.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace jastrow1d {

namespace {

constexpr double kGoldenTolerance = 1e-4;

struct Minimum {
    double x;
    double f;
};

// Golden-section search on [lo, hi], assuming a single interior minimum.
template <class Fn> Minimum golden_section(Fn &&f, double lo, double hi, double tol) {
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc < fd ? Minimum{c, fc} : Minimum{d, fd};
}

} // namespace

double minimum_scan_alpha(int particles) {
    return std::sqrt(std::max(0.0, JastrowAnsatz::alpha_squared_bound(particles))) + 1e-3;
}

ScanResult scan_alpha(const JastrowAnsatz &prototype, double alpha_min, double alpha_max, int steps, int quad_order,
                      Backend backend) {
    if (steps < 3) {
        throw InvalidArgument("alpha scan needs at least 3 steps");
    }
    if (!(alpha_min > minimum_scan_alpha(prototype.particles()))) {
        throw InvalidArgument("alpha_min = " + std::to_string(alpha_min) + " must exceed " +
                              std::to_string(minimum_scan_alpha(prototype.particles())));
    }
    if (!(alpha_max > alpha_min)) {
        throw InvalidArgument("alpha_max must exceed alpha_min");
    }

    ScanResult out;
    out.points.reserve(steps);
    for (int i = 0; i < steps; ++i) {
        const double alpha = alpha_min + (alpha_max - alpha_min) * i / (steps - 1);
        out.points.push_back({alpha, energy_expectation(prototype.with_alpha(alpha), quad_order, backend)});
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < out.points.size(); ++i) {
        if (out.points[i].estimate.energy < out.points[best].estimate.energy) {
            best = i;
        }
    }
    for (std::size_t i = 1; i + 1 < out.points.size(); ++i) {
        const double e = out.points[i].estimate.energy;
        if (i != best && e < out.points[i - 1].estimate.energy && e < out.points[i + 1].estimate.energy) {
            out.unimodal = false;
        }
    }
    if (!out.unimodal) {
        out.warnings.push_back("energy curve has more than one local minimum on the grid");
    }
    for (const auto &p : out.points) {
        if (!p.estimate.converged()) {
            out.warnings.push_back("quadrature not converged at alpha = " + std::to_string(p.alpha));
        }
    }

    out.alpha_star = out.points[best].alpha;
    out.energy_star = out.points[best].estimate.energy;
    if (best == 0 || best + 1 == out.points.size()) {
        out.boundary_minimum = true;
        out.warnings.push_back("minimum at the boundary of the alpha range; no refinement");
        return out;
    }

    const auto energy = [&](double alpha) {
        return energy_at_order(prototype.with_alpha(alpha), quad_order, backend).energy;
    };
    const Minimum refined =
        golden_section(energy, out.points[best - 1].alpha, out.points[best + 1].alpha, kGoldenTolerance);
    if (refined.f < out.energy_star) {
        out.alpha_star = refined.x;
        out.energy_star = refined.f;
    }
    return out;
}

} // namespace jastrow1d
