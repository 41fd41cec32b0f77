#pragma once

// Elementary complex helpers and error-function variants shared by the
// transforms, the solvers and the reference solutions.

#include "infil/core.hpp"

namespace infil::special {

/// e^z - 1 without cancellation for small |z|.
Complex expm1(Complex z);

/// (1 - e^{-z}) / z, analytic at z = 0.
Complex one_minus_exp_over(Complex z);

/// (1 - e^{-z}(1 + z)) / z^2, analytic at z = 0.
Complex one_minus_exp_linear_over(Complex z);

/// Integral of e^{-w u} over [0, h].
inline Complex exp_integral0(Complex w, double h) { return h * one_minus_exp_over(w * h); }

/// Integral of u e^{-w u} over [0, h].
inline Complex exp_integral1(Complex w, double h) {
    return h * h * one_minus_exp_linear_over(w * h);
}

/// Scaled complementary error function e^{x^2} erfc(x), real argument.
double erfcx(double x);

/// sinh(a s) / sinh(b s) for 0 <= a <= b, b > 0, any real s (limit a/b at s = 0).
double sinh_ratio(double a, double b, double s);

}  // namespace infil::special
