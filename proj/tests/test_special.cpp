#include <doctest.h>

#include <cmath>
#include <numbers>

#include "infil/special.hpp"
#include "oracles.hpp"

using namespace infil;

TEST_CASE("erfcx against the unscaled product and the asymptotic series") {
    for (double x = -3.0; x <= 6.0; x += 0.25) {
        const double direct = std::exp(x * x) * std::erfc(x);
        CHECK(special::erfcx(x) == doctest::Approx(direct).epsilon(1e-13));
    }
    for (double x : {30.0, 1e3, 1e6}) {
        const double inv = 1.0 / (x * x);
        const double asym = (1.0 - 0.5 * inv + 0.75 * inv * inv - 1.875 * inv * inv * inv) / (x * std::sqrt(std::numbers::pi));
        CHECK(special::erfcx(x) == doctest::Approx(asym).epsilon(1e-12));
    }
}

TEST_CASE("complex expm1 keeps relative accuracy near zero") {
    for (Complex z : {Complex(1e-10, 2e-10), Complex(-3e-9, 1e-12), Complex(0.3, -0.7), Complex(-2.0, 5.0)}) {
        // Taylor series near zero, long double elsewhere
        const std::complex<long double> zl(z.real(), z.imag());
        const std::complex<long double> ref =
            std::abs(z) < 1e-3 ? zl + zl * zl / 2.0L + zl * zl * zl / 6.0L : std::exp(zl) - 1.0L;
        const Complex got = special::expm1(z);
        const double scale = std::abs(Complex(double(ref.real()), double(ref.imag())));
        CHECK(std::abs(got - Complex(double(ref.real()), double(ref.imag()))) <= 1e-15 * scale + 1e-300);
    }
}

TEST_CASE("exponential moments against quadrature") {
    for (Complex w : {Complex(0.0, 0.0), Complex(1e-9, 0.0), Complex(2.0, -3.0), Complex(-1.5, 40.0), Complex(50.0, 1.0)}) {
        for (double h : {1e-3, 0.7, 3.0}) {
            const auto f0 = [&](double u) { return std::exp(-w * u); };
            const auto f1 = [&](double u) { return u * std::exp(-w * u); };
            const Complex q0 = oracle::integrate<Complex>(f0, 0.0, h, 40);
            const Complex q1 = oracle::integrate<Complex>(f1, 0.0, h, 40);
            CHECK(std::abs(special::exp_integral0(w, h) - q0) <= 1e-13 * std::abs(q0));
            CHECK(std::abs(special::exp_integral1(w, h) - q1) <= 1e-12 * std::abs(q1));
        }
    }
}

TEST_CASE("one_minus_exp_over is analytic at zero") {
    CHECK(std::abs(special::one_minus_exp_over(Complex(0.0, 0.0)) - 1.0) == 0.0);
    CHECK(std::abs(special::one_minus_exp_linear_over(Complex(0.0, 0.0)) - 0.5) < 1e-16);
    const Complex z(1e-5, -2e-5);
    CHECK(std::abs(special::one_minus_exp_over(z) - (1.0 - z / 2.0 + z * z / 6.0)) < 1e-15);
}

TEST_CASE("sinh_ratio limits and overflow-free evaluation") {
    CHECK(special::sinh_ratio(1.0, 2.0, 0.0) == doctest::Approx(0.5));
    CHECK(special::sinh_ratio(1.0, 2.0, 0.3) == doctest::Approx(std::sinh(0.3) / std::sinh(0.6)).epsilon(1e-14));
    CHECK(special::sinh_ratio(1.0, 2.0, -0.3) == doctest::Approx(std::sinh(0.3) / std::sinh(0.6)).epsilon(1e-14));
    // sinh(900)/sinh(1000) overflows when formed directly
    CHECK(special::sinh_ratio(900.0, 1000.0, 1.0) == doctest::Approx(std::exp(-100.0)).epsilon(1e-13));
}
