#include "jastrow1d/errors.hpp"
#include "jastrow1d/jastrow.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using namespace jastrow1d;

namespace {

const double kLogPiQuarter = -0.25 * std::log(std::numbers::pi);

JastrowAnsatz make_ansatz(const Interaction &inter, int n, Statistics s, double alpha, int m = 15) {
    return JastrowAnsatz(n, s, alpha, solve_relative(inter, m, parity_for(s)));
}

Interaction none() { return Interaction::make(InteractionKind::none, 0.0); }
Interaction q1d(double g) { return Interaction::make(InteractionKind::quasi1d_coulomb, g, 0.1); }

std::vector<double> random_config(std::mt19937 &rng, int n, double spread = 1.0) {
    std::normal_distribution<double> dist(0.0, spread);
    std::vector<double> x(n);
    for (double &v : x) v = dist(rng);
    return x;
}

// (H psi)/psi with a 7-point stencil for each second derivative of psi.
double finite_difference_energy(const JastrowAnsatz &a, std::vector<double> x, double h) {
    static constexpr std::array<double, 7> c{2.0, -27.0, 270.0, -490.0, 270.0, -27.0, 2.0};
    const LogPsi centre = log_psi(a, x);
    const auto psi = [&](const std::vector<double> &y) {
        const LogPsi l = log_psi(a, y);
        return l.sign * std::exp(l.log_abs - centre.log_abs);
    };
    double laplacian = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double xk = x[k];
        double d2 = 0.0;
        for (int j = 0; j < 7; ++j) {
            x[k] = xk + (j - 3) * h;
            d2 += c[j] * psi(x);
        }
        x[k] = xk;
        laplacian += d2 / (180.0 * h * h);
    }
    double e = -0.5 * laplacian / centre.sign;
    for (std::size_t i = 0; i < x.size(); ++i) {
        e += 0.5 * x[i] * x[i];
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            e += potential_value(a.interaction(), x[i] - x[j]);
        }
    }
    return e;
}

} // namespace

TEST_CASE("ansatz construction is validated") {
    const auto even = solve_relative(none(), 10, Parity::even);
    const auto odd = solve_relative(none(), 10, Parity::odd);
    CHECK_THROWS_AS(JastrowAnsatz(1, Statistics::bosons, 1.0, even), InvalidArgument);
    CHECK_THROWS_AS(JastrowAnsatz(5, Statistics::bosons, 1.0, even), InvalidArgument);
    CHECK_THROWS_AS(JastrowAnsatz(3, Statistics::fermions, 1.0, even), InvalidArgument);
    CHECK_THROWS_AS(JastrowAnsatz(3, Statistics::bosons, 1.0, odd), InvalidArgument);
    // N = 3: alpha^2 > 1/3 + 1e-6
    CHECK(JastrowAnsatz::alpha_squared_bound(3) == doctest::Approx(1.0 / 3.0));
    CHECK_THROWS_AS(JastrowAnsatz(3, Statistics::bosons, std::sqrt(1.0 / 3.0), even), InvalidArgument);
    CHECK_NOTHROW(JastrowAnsatz(3, Statistics::bosons, std::sqrt(1.0 / 3.0 + 2e-6), even));
    CHECK_NOTHROW(JastrowAnsatz(2, Statistics::bosons, 0.05, even));
    CHECK(minimum_scan_alpha(3) == doctest::Approx(std::sqrt(1.0 / 3.0) + 1e-3));
    CHECK(minimum_scan_alpha(2) == doctest::Approx(1e-3));
}

TEST_CASE("pair factor limits without interaction") {
    const auto bosons = make_ansatz(none(), 3, Statistics::bosons, 1.0);
    const auto fermions = make_ansatz(none(), 3, Statistics::fermions, 1.0);
    for (double u : {-2.5, -0.4, 0.3, 1.0, 3.7}) {
        const auto b = pair_log_factor(bosons, u);
        CHECK(std::abs(b.ratio1) < 1e-12);
        CHECK(std::abs(b.ratio2) < 1e-12);
        CHECK(b.log_abs == doctest::Approx(kLogPiQuarter).epsilon(1e-13));
        const auto f = pair_log_factor(fermions, u);
        CHECK(f.ratio1 == doctest::Approx(1.0 / u).epsilon(1e-12));
        CHECK(std::abs(f.ratio2) < 1e-11);
        CHECK(f.sign == (u > 0 ? 1 : -1));
    }
    CHECK_THROWS_AS(pair_log_factor(fermions, 0.0), NodeSingularity);
}

TEST_CASE("pair factor ratios match finite differences") {
    for (auto s : {Statistics::bosons, Statistics::fermions}) {
        const auto a = make_ansatz(q1d(0.5), 3, s, 0.93);
        const double h = 1e-5;
        for (double u : {0.8, -1.7, 2.4}) {
            const auto p = pair_log_factor(a, u);
            const double lp = pair_log_factor(a, u + h).log_abs;
            const double lm = pair_log_factor(a, u - h).log_abs;
            CHECK(std::abs(p.ratio1 - (lp - lm) / (2 * h)) < 1e-7);
            // f''/f = (log f)'' + (f'/f)^2
            const double h2 = 1e-4;
            const double l2 =
                (pair_log_factor(a, u + h2).log_abs - 2 * p.log_abs + pair_log_factor(a, u - h2).log_abs) / (h2 * h2);
            CHECK(std::abs(p.ratio2 - (l2 + p.ratio1 * p.ratio1)) < 1e-5);
        }
    }
}

TEST_CASE("log_psi values, nodes and exchange symmetry") {
    const auto bosons0 = make_ansatz(none(), 3, Statistics::bosons, 1.0);
    const std::vector<double> origin{0.0, 0.0, 0.0};
    const LogPsi l0 = log_psi(bosons0, origin);
    CHECK(l0.sign == 1);
    CHECK(l0.log_abs == doctest::Approx(3.0 * kLogPiQuarter).epsilon(1e-13));

    const auto fermions = make_ansatz(q1d(0.5), 3, Statistics::fermions, 0.95);
    const LogPsi node = log_psi(fermions, std::vector<double>{0.4, 0.4, -1.0});
    CHECK(node.sign == 0);
    CHECK(std::isinf(node.log_abs));
    CHECK(node.log_abs < 0.0);
    CHECK_THROWS_AS(log_psi(fermions, std::vector<double>{0.1, 0.2}), InvalidArgument);

    std::mt19937 rng(11);
    for (int n : {3, 4}) {
        for (auto s : {Statistics::bosons, Statistics::fermions}) {
            const auto a = make_ansatz(q1d(0.5), n, s, 1.02);
            for (int trial = 0; trial < 20; ++trial) {
                std::vector<double> x = random_config(rng, n);
                const LogPsi ref = log_psi(a, x);
                std::swap(x[0], x[n - 1]);
                const LogPsi swapped = log_psi(a, x);
                CHECK(swapped.log_abs == doctest::Approx(ref.log_abs).epsilon(1e-13));
                CHECK(swapped.sign == (s == Statistics::bosons ? ref.sign : -ref.sign));
                // A cyclic shift of three particles is an even permutation.
                std::rotate(x.begin(), x.begin() + 1, x.begin() + 3);
                const LogPsi cycled = log_psi(a, x);
                CHECK(cycled.sign == swapped.sign);
                CHECK(cycled.log_abs == doctest::Approx(ref.log_abs).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("local energy of exact eigenstates is constant") {
    std::mt19937 rng(5);
    const auto bosons = make_ansatz(none(), 3, Statistics::bosons, 1.0);
    const auto fermions = make_ansatz(none(), 3, Statistics::fermions, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        const auto x = random_config(rng, 3, 1.5);
        CHECK(local_energy(bosons, x) == doctest::Approx(1.5).epsilon(1e-11));
        CHECK(local_energy(fermions, x) == doctest::Approx(4.5).epsilon(1e-11));
    }
    const auto f4 = make_ansatz(none(), 4, Statistics::fermions, 1.0);
    CHECK(local_energy(f4, std::vector<double>{-1.1, -0.2, 0.5, 1.9}) == doctest::Approx(8.0).epsilon(1e-11));
}

TEST_CASE("local energy matches the finite-difference Hamiltonian") {
    std::mt19937 rng(2024);
    const std::vector<Interaction> kinds{q1d(0.5), q1d(5.0), Interaction::make(InteractionKind::soft_coulomb, 1.0, 0.2),
                                         Interaction::make(InteractionKind::gaussian, 2.0, 0.4)};
    for (const auto &inter : kinds) {
        for (auto s : {Statistics::bosons, Statistics::fermions}) {
            CAPTURE(to_string(inter.kind));
            CAPTURE(inter.strength);
            CAPTURE(to_string(s));
            const auto a = make_ansatz(inter, 3, s, 0.92);
            for (int trial = 0; trial < 50; ++trial) {
                const auto x = random_config(rng, 3);
                const double el = local_energy(a, x);
                const double fd = finite_difference_energy(a, x, 1e-4);
                CHECK(std::abs(el - fd) <= 1e-5 * std::abs(fd));
            }
        }
    }
}

TEST_CASE("local energy is rejected for contact and at nodes") {
    const auto contact = make_ansatz(Interaction::make(InteractionKind::contact, 2.0), 3, Statistics::bosons, 1.0);
    CHECK_THROWS_AS(local_energy(contact, std::vector<double>{0.1, 0.5, -0.3}), InvalidArgument);
    CHECK(std::isfinite(kinetic_local_energy(contact, std::vector<double>{0.1, 0.5, -0.3})));
    const auto fermions = make_ansatz(none(), 3, Statistics::fermions, 1.0);
    CHECK_THROWS_AS(local_energy(fermions, std::vector<double>{0.3, 0.3, 1.0}), NodeSingularity);
}
