#include <doctest.h>

#include <cmath>
#include <numbers>

#include "infil/contour.hpp"
#include "infil/quadrature.hpp"

using namespace infil;

TEST_CASE("adaptive Gauss-Kronrod on closed-form integrals") {
    const QuadratureOptions opts;
    const auto r1 = integrate_adaptive([](double x) { return Complex(std::cos(x), std::sin(x)); }, 0.0, 1.0, opts);
    const Complex exact1 = (std::exp(Complex(0.0, 1.0)) - 1.0) / Complex(0.0, 1.0);
    CHECK(std::abs(r1.value - exact1) < 1e-14);
    // endpoint singularity x^{-1/2}
    const auto r2 = integrate_adaptive([](double x) { return Complex(1.0 / std::sqrt(x)); }, 0.0, 1.0, opts);
    CHECK(r2.value.real() == doctest::Approx(2.0).epsilon(1e-9));
    // split points help a kink
    const double pts[] = {-1.0, 0.3, 2.0};
    const auto r3 = integrate_adaptive([](double x) { return Complex(std::abs(x - 0.3)); }, pts, opts);
    CHECK(r3.value.real() == doctest::Approx(0.5 * 1.3 * 1.3 + 0.5 * 1.7 * 1.7).epsilon(1e-14));
    CHECK(r3.nodes == 30);
}

TEST_CASE("node budget exhaustion is reported") {
    QuadratureOptions opts;
    opts.max_nodes = 200;
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return Complex(std::sin(1.0 / (x + 1e-6))); }, 0.0, 1.0, opts),
                    Error);
}

TEST_CASE("geometric breakpoints") {
    const auto p = geometric_points(0.0, 10.0, 1.0);
    REQUIRE(p.size() == 6);
    CHECK(p[0] == 0.0);
    CHECK(p[1] == 1.0);
    CHECK(p[4] == 8.0);
    CHECK(p.back() == 10.0);
}

TEST_CASE("Gaussian over rays and the real line") {
    const ContourConfig cfg;
    for (double t : {1e-3, 1.0, 250.0}) {
        const ComplexFn g = [t](Complex mu) { return std::exp(-t * mu * mu); };
        const double exact = std::sqrt(std::numbers::pi / t);
        const ContourResult up = integrate_upper_rays(g, cfg, t);
        const ContourResult down = integrate_lower_rays(g, cfg, t);
        const ContourResult line = integrate_real_line(g, cfg, t);
        CHECK(std::abs(up.value - exact) <= 1e-10 * exact);
        CHECK(std::abs(down.value + exact) <= 1e-10 * exact);  // traversed right to left
        CHECK(std::abs(line.value - exact) <= 1e-10 * exact);
        CHECK(up.tail <= cfg.abs_tol);
    }
    CHECK_THROWS_AS(integrate_real_line([](Complex) { return Complex(1.0); }, cfg, 0.0), Error);
}

TEST_CASE("ray angle does not change a contour integral") {
    const ComplexFn g = [](Complex mu) { return std::exp(-2.0 * mu * mu + Complex(0.0, 1.5) * mu); };
    const Complex exact = std::sqrt(std::numbers::pi / 2.0) * std::exp(-1.5 * 1.5 / 8.0);
    for (double angle : {std::numbers::pi / 12, std::numbers::pi / 8, std::numbers::pi / 6}) {
        ContourConfig cfg;
        cfg.ray_angle = angle;
        CHECK(std::abs(integrate_upper_rays(g, cfg, 2.0).value - exact) <= 1e-10 * std::abs(exact));
    }
}

TEST_CASE("arc bypass of a simple pole") {
    const ContourConfig cfg;
    const ComplexFn g = [](Complex mu) { return std::exp(-mu * mu) / mu; };
    BypassOptions upper;
    upper.decay_scale = 1.0;
    // passing below the pole adds i pi to the (vanishing) principal value
    const ContourResult below = bypass_origin(g, cfg, 0.1, upper);
    CHECK(std::abs(below.value - Complex(0.0, std::numbers::pi)) < 1e-10);
    CHECK(std::abs(below.residue - 1.0) < 1e-12);

    BypassOptions lower = upper;
    lower.lower = true;
    const ContourResult above = bypass_origin(g, cfg, 0.1, lower);
    // lower contour runs right to left above the pole: -(PV - i pi) = i pi
    CHECK(std::abs(above.value - Complex(0.0, std::numbers::pi)) < 1e-10);
}

TEST_CASE("unresolved singularities and truncation are errors") {
    const ContourConfig cfg;
    BypassOptions opts;
    opts.decay_scale = 1.0;
    // second pole inside the arc circle, off centre
    const ComplexFn near = [](Complex mu) { return std::exp(-mu * mu) / (mu * (mu - Complex(0.0, -0.09))); };
    CHECK_THROWS_AS(bypass_origin(near, cfg, 0.1, opts), Error);

    // claims Gaussian decay but only decays like 1/mu
    const ComplexFn slow = [](Complex mu) { return 1.0 / std::sqrt(mu * mu + 1.0); };
    try {
        integrate_upper_rays(slow, cfg, 1.0);
        FAIL("expected TruncationDominated");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TruncationDominated);
    }
}

TEST_CASE("Laurent coefficients of a known expansion") {
    const ComplexFn g = [](Complex mu) { return std::exp(mu) / (mu * mu); };
    // e^mu / mu^2 = mu^-2 + mu^-1 + 1/2 + mu/6 + ...
    CHECK(std::abs(laurent_coefficient(g, 0.0, 0.5, -2) - 1.0) < 1e-14);
    CHECK(std::abs(laurent_coefficient(g, 0.0, 0.5, -1) - 1.0) < 1e-14);
    CHECK(std::abs(laurent_coefficient(g, 0.0, 0.5, 1) - 1.0 / 6.0) < 1e-14);
    const auto all = laurent_coefficients(g, 0.0, 0.5);
    CHECK(std::abs(all[34] - 1.0 / 24.0) < 1e-14);
}

TEST_CASE("contour configuration checks") {
    ContourConfig cfg;
    cfg.ray_angle = std::numbers::pi / 3;  // beyond pi/4 the Gaussian factor grows
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = ContourConfig{};
    cfg.rel_tol = -1.0;
    CHECK_THROWS_AS(cfg.validate(), Error);
}
