#include "infil/special.hpp"

#include <cmath>

namespace infil::special {

Complex expm1(Complex z) {
    const double x = z.real();
    const double y = z.imag();
    const double s = std::sin(0.5 * y);
    return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

Complex one_minus_exp_over(Complex z) {
    if (std::abs(z) < 1e-8) {
        return 1.0 - 0.5 * z;
    }
    return -expm1(-z) / z;
}

Complex one_minus_exp_linear_over(Complex z) {
    if (std::abs(z) < 1.0) {
        // sum_k (-z)^k / (k! (k + 2))
        Complex term = 1.0;
        Complex sum = 0.5;
        for (int k = 1; k < 30; ++k) {
            term *= -z / static_cast<double>(k);
            const Complex add = term / static_cast<double>(k + 2);
            sum += add;
            if (std::abs(add) < 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    return (1.0 - std::exp(-z) * (1.0 + z)) / (z * z);
}

double erfcx(double x) {
    if (x < 5.0) {
        return std::exp(x * x) * std::erfc(x);
    }
    // Continued fraction for erfc: e^{x^2} erfc(x) = (1/sqrt(pi)) / (x + 1/2/(x + 1/(x + 3/2/(x + ...))))
    // evaluated bottom-up; 60 levels are far beyond what x >= 5 needs.
    double f = x;
    for (int k = 60; k >= 1; --k) {
        f = x + (0.5 * k) / f;
    }
    return 1.0 / (std::sqrt(kPi) * f);
}

double sinh_ratio(double a, double b, double s) {
    const double as = std::abs(s);
    if (as * b < 1e-8) {
        return a / b;
    }
    // sinh(a s)/sinh(b s) = e^{-(b-a)|s|} (1 - e^{-2a|s|}) / (1 - e^{-2b|s|})
    return std::exp(-(b - a) * as) * std::expm1(-2.0 * a * as) / std::expm1(-2.0 * b * as);
}

}  // namespace infil::special
