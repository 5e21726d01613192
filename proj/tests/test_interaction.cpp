#include "jastrow1d/errors.hpp"
#include "jastrow1d/interaction.hpp"
#include "jastrow1d/oscillator.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace jastrow1d;

namespace {

const double kSqrt2 = std::numbers::sqrt2;

// Trapezoid rule for <m|V(scale x)|n> on [-L, L] with `intervals` panels.
Matrix trapezoid_elements(const Interaction &inter, int size, double scale, double length, int intervals) {
    Matrix out = Matrix::square(size);
    const double h = 2.0 * length / intervals;
    std::vector<double> chi(size);
    for (int i = 0; i <= intervals; ++i) {
        const double x = -length + h * i;
        const double w = (i == 0 || i == intervals) ? 0.5 * h : h;
        const double v = potential_value(inter, scale * x);
        ho_orbitals(x, chi);
        for (int m = 0; m < size; ++m) {
            for (int n = 0; n < size; ++n) {
                out(m, n) += w * chi[m] * v * chi[n];
            }
        }
    }
    return out;
}

} // namespace

TEST_CASE("interaction kinds round-trip through their names") {
    for (auto k : {InteractionKind::none, InteractionKind::contact, InteractionKind::soft_coulomb,
                   InteractionKind::quasi1d_coulomb, InteractionKind::gaussian}) {
        CHECK(parse_interaction_kind(to_string(k)) == k);
    }
    CHECK_THROWS_AS(parse_interaction_kind("coulomb"), InvalidArgument);
}

TEST_CASE("Interaction::make validates the range") {
    CHECK_THROWS_AS(Interaction::make(InteractionKind::soft_coulomb, 1.0, 0.0), InvalidArgument);
    CHECK_THROWS_AS(Interaction::make(InteractionKind::quasi1d_coulomb, 1.0, -0.1), InvalidArgument);
    CHECK_THROWS_AS(Interaction::make(InteractionKind::gaussian, NAN, 0.1), InvalidArgument);
    CHECK_NOTHROW(Interaction::make(InteractionKind::contact, 2.0, 0.0));
    CHECK_NOTHROW(Interaction::make(InteractionKind::none, 0.0, -1.0));
}

TEST_CASE("pointwise potentials") {
    const auto none = Interaction::make(InteractionKind::none, 3.0);
    const auto soft = Interaction::make(InteractionKind::soft_coulomb, 1.0, 0.1);
    const auto q1d = Interaction::make(InteractionKind::quasi1d_coulomb, 1.0, 0.1);
    const auto gauss = Interaction::make(InteractionKind::gaussian, 1.0, 0.1);

    CHECK(potential_value(none, 0.7) == 0.0);
    CHECK(potential_value(soft, 0.0) == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(potential_value(q1d, 0.0) == doctest::Approx(12.533141373155).epsilon(1e-12));
    CHECK(potential_value(q1d, 5.0) == doctest::Approx(1.0 / 5.0).epsilon(0.01));
    CHECK(potential_value(gauss, 0.0) == doctest::Approx(1.0 / (std::sqrt(2 * std::numbers::pi) * 0.1)));
    CHECK(potential_value(q1d, -0.3) == potential_value(q1d, 0.3));
    CHECK_THROWS_AS(potential_value(Interaction::make(InteractionKind::contact, 1.0), 0.1), InvalidArgument);

    for (int i = 0; i <= 1000; ++i) {
        const double v = potential_value(q1d, 0.1 * i);
        CHECK(std::isfinite(v));
        CHECK(v >= 0.0);
    }
}

TEST_CASE("potential matrix: none and contact") {
    const Matrix zero = potential_matrix(Interaction::make(InteractionKind::none, 0.0), 10, kSqrt2);
    for (double v : zero.data()) {
        CHECK(v == 0.0);
    }
    const Matrix c = potential_matrix(Interaction::make(InteractionKind::contact, 1.0), 6, kSqrt2);
    CHECK(c(0, 0) == doctest::Approx(0.3989422804014327).epsilon(1e-14));
    CHECK(c(1, 1) == 0.0);
    CHECK(c(0, 2) == c(2, 0));
}

TEST_CASE("quasi-1D Coulomb elements agree with an extrapolated trapezoid oracle") {
    const auto inter = Interaction::make(InteractionKind::quasi1d_coulomb, 0.5, 0.1);
    const int size = 12;
    const Matrix got = potential_matrix(inter, size, kSqrt2);
    // The potential has a cusp at the origin (a grid node), so the trapezoid
    // error is a clean h^2 series and one Richardson step removes it.
    const Matrix coarse = trapezoid_elements(inter, size, kSqrt2, 12.0, 100000);
    const Matrix fine = trapezoid_elements(inter, size, kSqrt2, 12.0, 200000);
    double worst = 0.0;
    for (int m = 0; m < size; ++m) {
        for (int n = 0; n < size; ++n) {
            const double ref = (4.0 * fine(m, n) - coarse(m, n)) / 3.0;
            worst = std::max(worst, std::abs(got(m, n) - ref));
        }
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("potential matrices are symmetric, parity-blocked and linear in g") {
    for (auto kind : {InteractionKind::soft_coulomb, InteractionKind::quasi1d_coulomb, InteractionKind::gaussian,
                      InteractionKind::contact}) {
        CAPTURE(to_string(kind));
        const Matrix a = potential_matrix(Interaction::make(kind, 0.5, 0.1), 15, kSqrt2);
        const Matrix b = potential_matrix(Interaction::make(kind, 1.0, 0.1), 15, kSqrt2);
        CHECK(max_abs_asymmetry(a) == 0.0);
        for (int m = 0; m < 15; ++m) {
            for (int n = 0; n < 15; ++n) {
                if ((m + n) % 2) {
                    CHECK(std::abs(a(m, n)) <= 1e-12);
                }
                CHECK(b(m, n) == 2.0 * a(m, n));
            }
        }
    }
}

TEST_CASE("a rule that does not reach the orbital extent is rejected") {
    const auto inter = Interaction::make(InteractionKind::soft_coulomb, 1.0, 0.1);
    const QuadratureRule short_rule = graded_half_line_rule(0.1, 1.0);
    CHECK_THROWS_AS(potential_matrix(inter, 15, short_rule, kSqrt2), InvalidArgument);
}
