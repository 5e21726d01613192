#include "jastrow1d/special.hpp"

#include "jastrow1d/errors.hpp"

#include <cmath>
#include <numbers>

namespace jastrow1d {

namespace {

// Below this point exp(x^2) * erfc(x) loses at most ~2x^2 ulps.
constexpr double kDirectLimit = 4.0;

// Lentz evaluation of the Laplace continued fraction
//   sqrt(pi) erfcx(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
double erfcx_continued_fraction(double x) {
    constexpr double tiny = 1e-300;
    constexpr double eps = 1e-16;
    double f = x;
    double c = x;
    double d = 0.0;
    for (int k = 1; k < 2000; ++k) {
        const double a = 0.5 * k;
        d = x + a * d;
        if (std::abs(d) < tiny) {
            d = tiny;
        }
        c = x + a / c;
        if (std::abs(c) < tiny) {
            c = tiny;
        }
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < eps) {
            break;
        }
    }
    return 1.0 / (f * std::sqrt(std::numbers::pi));
}

} // namespace

double erfcx(double x) {
    if (std::isnan(x) || x < 0.0) {
        throw InvalidArgument("erfcx: argument must be a non-negative number");
    }
    if (x < kDirectLimit) {
        return std::exp(x * x) * std::erfc(x);
    }
    if (std::isinf(x)) {
        return 0.0;
    }
    return erfcx_continued_fraction(x);
}

} // namespace jastrow1d
