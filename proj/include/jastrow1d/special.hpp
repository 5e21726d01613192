#pragma once

namespace jastrow1d {

// Scaled complementary error function exp(x^2) erfc(x) for x >= 0.
// Relative error below 1e-12 on [0, 30]; finite for arbitrarily large x.
double erfcx(double x);

} // namespace jastrow1d
