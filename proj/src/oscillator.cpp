#include "jastrow1d/oscillator.hpp"

#include "jastrow1d/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace jastrow1d {

namespace {

const double kPiQuarter = std::pow(std::numbers::pi, -0.25);

void check_index(int n) {
    if (n < 0 || n >= kMaxHermiteOrder) {
        throw InvalidArgument("oscillator index " + std::to_string(n) + " outside [0, 512)");
    }
}

// Normalized Hermite polynomials p_k = chi_k(z) exp(z^2/2) up to k = order.
// Returns {p_order, p_{order-1}}.
std::pair<double, double> normalized_hermite_pair(int order, double z) {
    double p1 = kPiQuarter;
    double p2 = 0.0;
    for (int j = 0; j < order; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
    }
    return {p1, p2};
}

} // namespace

OscillatorBasis::OscillatorBasis(int size) : size_(size) {
    if (size < 2 || size > kMaxHermiteOrder) {
        throw InvalidArgument("oscillator basis size must be in [2, 512], got " + std::to_string(size));
    }
}

QuadratureRule gauss_hermite_rule(int order) {
    if (order < 1 || order > kMaxHermiteOrder) {
        throw InvalidArgument("Gauss-Hermite order must be in [1, 512], got " + std::to_string(order));
    }
    const int n = order;
    const int half = (n + 1) / 2;
    std::vector<double> roots(half);
    std::vector<double> weights(half);

    // Largest roots first. All roots lie below sqrt(2n + 1) and no two are
    // closer than about pi / sqrt(2n + 1), so stepping down by a quarter of that
    // isolates each root in its own sign-change bracket, which Newton then
    // polishes (falling back to bisection if a step leaves the bracket).
    const double step_down = 0.25 * std::numbers::pi / std::sqrt(2.0 * n + 1.0);
    double upper = std::sqrt(2.0 * n + 1.0);
    double f_upper = normalized_hermite_pair(n, upper).first;
    for (int i = 0; i < half; ++i) {
        if (n % 2 == 1 && i == half - 1) {
            roots[i] = 0.0;
            const double slope = std::sqrt(2.0 * n) * normalized_hermite_pair(n, 0.0).second;
            weights[i] = 2.0 / (slope * slope);
            break;
        }
        double lower = upper;
        double f_lower = f_upper;
        do {
            upper = lower;
            f_upper = f_lower;
            lower = upper - step_down;
            f_lower = normalized_hermite_pair(n, lower).first;
        } while ((f_lower < 0.0) == (f_upper < 0.0) && f_lower != 0.0);

        double a = lower;
        double b = upper;
        const bool rising = f_upper > f_lower;
        double z = 0.5 * (a + b);
        bool converged = false;
        for (int it = 0; it < 200; ++it) {
            const auto [p, pm1] = normalized_hermite_pair(n, z);
            if (p == 0.0) {
                converged = true;
                break;
            }
            if ((p > 0.0) == rising) {
                b = z;
            } else {
                a = z;
            }
            double next = z - p / (std::sqrt(2.0 * n) * pm1);
            if (!(next > a && next < b)) {
                next = 0.5 * (a + b);
            }
            const double moved = std::abs(next - z);
            z = next;
            if (moved <= 1e-15 * std::max(1.0, std::abs(z)) || b - a <= 4e-16 * std::max(1.0, std::abs(z))) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            throw NumericalFailure("Gauss-Hermite root search failed at order " + std::to_string(n));
        }
        const double slope = std::sqrt(2.0 * n) * normalized_hermite_pair(n, z).second;
        roots[i] = z;
        weights[i] = 2.0 / (slope * slope);
        // The next root lies strictly below this bracket.
        upper = lower;
        f_upper = f_lower;
    }

    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < half; ++i) {
        rule.nodes[i] = -roots[i];
        rule.nodes[n - 1 - i] = roots[i];
        rule.weights[i] = weights[i];
        rule.weights[n - 1 - i] = weights[i];
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
    }
    return rule;
}

QuadratureRule gauss_legendre_rule(int order) {
    if (order < 1 || order > kMaxHermiteOrder) {
        throw InvalidArgument("Gauss-Legendre order must be in [1, 512], got " + std::to_string(order));
    }
    const int n = order;
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            dp = n * (z * p1 - p2) / (z * z - 1.0);
            const double step = p1 / dp;
            z -= step;
            if (std::abs(step) <= 1e-16) {
                break;
            }
        }
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
    }
    return rule;
}

QuadratureRule graded_half_line_rule(double core_width, double length, int points_per_panel) {
    if (!(core_width > 0.0) || !(length > 0.0)) {
        throw InvalidArgument("graded rule needs positive core width and length");
    }
    const QuadratureRule unit = gauss_legendre_rule(points_per_panel);
    std::vector<double> edges{0.0};
    double width = std::min(core_width / 8.0, 1.0);
    while (edges.back() < length) {
        edges.push_back(std::min(length, edges.back() + width));
        width = std::min(1.0, 1.5 * width);
    }
    QuadratureRule rule;
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
        const double half = 0.5 * (edges[p + 1] - edges[p]);
        const double mid = 0.5 * (edges[p + 1] + edges[p]);
        for (int i = 0; i < unit.order(); ++i) {
            rule.nodes.push_back(mid + half * unit.nodes[i]);
            rule.weights.push_back(half * unit.weights[i]);
        }
    }
    return rule;
}

void ho_orbitals(double x, std::span<double> out) {
    if (out.empty()) {
        return;
    }
    out[0] = kPiQuarter * std::exp(-0.5 * x * x);
    if (out.size() > 1) {
        out[1] = std::numbers::sqrt2 * x * out[0];
    }
    for (std::size_t k = 1; k + 1 < out.size(); ++k) {
        const double kk = static_cast<double>(k);
        out[k + 1] = x * std::sqrt(2.0 / (kk + 1.0)) * out[k] - std::sqrt(kk / (kk + 1.0)) * out[k - 1];
    }
}

double ho_eigenfunction(int n, double x) {
    check_index(n);
    double prev = 0.0;
    double cur = kPiQuarter * std::exp(-0.5 * x * x);
    for (int k = 0; k < n; ++k) {
        const double next = x * std::sqrt(2.0 / (k + 1)) * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

OrbitalValue ho_derivatives(int n, double x) {
    check_index(n);
    double buf[kMaxHermiteOrder + 1];
    ho_orbitals(x, std::span<double>(buf, static_cast<std::size_t>(n) + 2));
    const double value = buf[n];
    const double lower = n > 0 ? std::sqrt(0.5 * n) * buf[n - 1] : 0.0;
    const double d1 = lower - std::sqrt(0.5 * (n + 1)) * buf[n + 1];
    const double d2 = (x * x - 2.0 * n - 1.0) * value;
    return {value, d1, d2};
}

} // namespace jastrow1d
