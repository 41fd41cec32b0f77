#include <doctest.h>

#include <cmath>
#include <numbers>

#include "infil/special.hpp"
#include "infil/transforms.hpp"
#include "oracles.hpp"

using namespace infil;

namespace {

Complex hat_by_quadrature(const std::function<double(double)>& u0, double length, Complex lambda) {
    const auto f = [&](double y) { return std::exp(Complex(0.0, -1.0) * lambda * y) * u0(y); };
    return oracle::integrate<Complex>(f, 0.0, length, 200);
}

Complex damped_by_quadrature(const std::function<double(double)>& f, Complex w, double t) {
    // in r = t - s; split at the kinks of the tabulated data and refine towards
    // r = 0 where the rainfall data behave like r^{3/2}
    const auto g = [&](double r) { return std::exp(-w * (t - r)) * f(r); };
    return oracle::integrate_geometric(g, 0.0, 1.0, 1e-6) + oracle::integrate<Complex>(g, 1.0, 2.5, 40) +
           oracle::integrate<Complex>(g, 2.5, t, 20);
}

}  // namespace

TEST_CASE("initial-data transform against quadrature") {
    const double length = 2.0;
    const initial::Tabulated tab{{{0.0, 0.5, 1.2, 2.0}, {0.3, 0.1, 0.25, 0.05}}};
    const auto u_tab = [&](double y) { return tab.samples(y); };
    for (Complex lam : {Complex(0.0, 0.0), Complex(1.3, 0.0), Complex(-4.0, 0.7), Complex(2.0, -0.5), Complex(30.0, 3.0)}) {
        const Complex q = hat_by_quadrature(u_tab, length, lam);
        CHECK(std::abs(hat_theta0(InitialData(tab), length, lam) - q) <= 1e-12 * (std::abs(q) + 1e-3));
        const Complex qc = hat_by_quadrature([](double) { return 0.7; }, length, lam);
        CHECK(std::abs(hat_theta0(InitialData(initial::Constant{0.7}), length, lam) - qc) <= 1e-12 * (std::abs(qc) + 1e-3));
        const Complex anchored = hat_theta0_anchored(InitialData(tab), length, lam);
        CHECK(std::abs(anchored - std::exp(Complex(0.0, 1.0) * lam * length) * q) <= 1e-11 * (std::abs(anchored) + 1e-3));
    }
    CHECK(hat_theta0(InitialData(initial::Zero{}), length, Complex(1.0, 1.0)) == Complex(0.0));
}

TEST_CASE("anchored transform stays finite deep in the upper half-plane") {
    const Complex lam(3.0, 800.0);
    const Complex v = hat_theta0_anchored(InitialData(initial::Constant{1.0}), 5.0, lam);
    CHECK(std::isfinite(std::abs(v)));
    // int_0^L e^{-i lam (y - L)} dy = (e^{i lam L} - 1) / (i lam) -> -1/(i lam)
    CHECK(std::abs(v + 1.0 / (Complex(0.0, 1.0) * lam)) < 1e-14);
}

TEST_CASE("surface content of the constant-flux rainfall") {
    const double ka = 3.87e-7;
    CHECK(braester_f2(0.0, ka) == 0.0);
    for (double t : {1.0, 600.0, 1e5, 1e7, 1e9}) {
        const double x = ka * t;
        const double z = std::sqrt(x) / 2.0;
        // written with erfc(-z) as in the usual statement of the solution
        const double ref = 0.5 * (std::erfc(-z) - (1.0 + x) * std::erfc(z) + 2.0 * std::sqrt(x / std::numbers::pi) * std::exp(-x / 4.0));
        CHECK(braester_f2(t, ka) == doctest::Approx(ref).epsilon(1e-12).scale(1e-12));
    }
    CHECK(braester_f2(1e12, ka) == doctest::Approx(1.0));
}

TEST_CASE("damped time transform against quadrature") {
    const double t = 3.0;
    const BoundaryData tab = boundary::Tabulated{{{0.0, 1.0, 2.5, 4.0}, {0.2, 0.6, 0.4, 0.4}}};
    const BoundaryData flux = boundary::BraesterFlux{0.8, 0.1};
    const BoundaryData constant = boundary::Constant{0.35};
    for (Complex w : {Complex(0.0, 0.0), Complex(0.5, 2.0), Complex(3.0, -1.0), Complex(40.0, 10.0), Complex(-0.4, 6.0)}) {
        for (const BoundaryData& data : {tab, flux, constant}) {
            const TimeTransform tt(data);
            const auto f = [&](double s) { return evaluate(data, s); };
            const Complex q = damped_by_quadrature(f, w, t);
            CHECK(std::abs(tt.damped(w, t) - q) <= 1e-10 * (std::abs(q) + 1e-6));
            const Complex split = evaluate(data, t) * t * special::one_minus_exp_over(w * t) + tt.remainder(w, t);
            CHECK(std::abs(split - q) <= 1e-10 * (std::abs(q) + 1e-6));
        }
    }
    CHECK(TimeTransform(constant).is_constant());
    CHECK(!TimeTransform(tab).is_constant());
    CHECK(TimeTransform(constant).remainder(Complex(1.0, 1.0), t) == Complex(0.0));
}

TEST_CASE("tilde_const is the undamped transform of a constant") {
    const Complex w(0.3, -2.0);
    const double t = 1.7;
    const auto f = [&](double s) { return 2.0 * std::exp(w * s); };
    const Complex q = oracle::integrate<Complex>(f, 0.0, t, 50);
    CHECK(std::abs(tilde_const(2.0, w, t) - q) < 1e-13 * std::abs(q));
}
