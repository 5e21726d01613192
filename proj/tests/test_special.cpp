#include "jastrow1d/errors.hpp"
#include "jastrow1d/special.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <limits>

using jastrow1d::erfcx;

namespace {

// exp(x^2) erfc(x) in extended precision; erfcl stays representable far past
// the point where the double product underflows.
long double erfcx_reference(long double x) { return std::exp(x * x) * std::erfc(x); }

} // namespace

TEST_CASE("erfcx matches the extended-precision product on [0, 30]") {
    double worst = 0.0;
    for (int i = 0; i <= 3000; ++i) {
        const double x = 0.01 * i;
        const long double ref = erfcx_reference(x);
        worst = std::max(worst, static_cast<double>(std::fabs((erfcx(x) - ref) / ref)));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("erfcx endpoints and asymptotics") {
    CHECK(erfcx(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    // erfcx(t) ~ 1/(t sqrt(pi)) (1 - 1/(2t^2) + 3/(4t^4) - 15/(8t^6))
    for (double t : {50.0, 200.0, 1e4, 1e8}) {
        const double y = 1.0 / (t * t);
        const double series = 1.0 / (t * std::sqrt(std::numbers::pi)) * (1.0 - 0.5 * y + 0.75 * y * y - 1.875 * y * y * y);
        CHECK(erfcx(t) == doctest::Approx(series).epsilon(1e-12));
    }
    CHECK(std::isfinite(erfcx(1e300)));
}

TEST_CASE("erfcx is decreasing") {
    double prev = erfcx(0.0);
    for (int i = 1; i <= 400; ++i) {
        const double v = erfcx(0.1 * i);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("erfcx rejects negative and NaN arguments") {
    CHECK_THROWS_AS(erfcx(-0.5), jastrow1d::InvalidArgument);
    CHECK_THROWS_AS(erfcx(std::numeric_limits<double>::quiet_NaN()), jastrow1d::InvalidArgument);
}
