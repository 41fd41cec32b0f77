#include <doctest.h>

#include <cmath>
#include <numbers>

#include "infil/solver.hpp"
#include "infil/transforms.hpp"
#include "oracles.hpp"

using namespace infil;
using Eigen::VectorXd;

namespace {

VectorXd vec(std::initializer_list<double> v) {
    VectorXd out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v) out[i++] = x;
    return out;
}

double max_error(const SolutionGrid& grid, const std::function<double(double, double)>& exact) {
    double err = 0.0;
    for (Eigen::Index i = 0; i < grid.nx(); ++i) {
        for (Eigen::Index j = 0; j < grid.nt(); ++j) {
            err = std::max(err, std::abs(grid.values(i, j) - exact(grid.xs[i], grid.ts[j])));
        }
    }
    return err;
}

}  // namespace

TEST_CASE("flooding matches the eigenfunction series") {
    SUBCASE("shallow profile") {
        const Coefficients c(0.5, 1.0);
        const oracle::SineSeries exact(0.5, 1.0, 0.05, 1.9355, 0.0, [](double) { return 0.0; }, 0.0);
        const SolutionGrid g = solve_flooding(0.0, 1.9355, c, 0.05, VectorXd::LinSpaced(11, 0.0, 0.05), vec({0.03, 0.06, 0.6}));
        CHECK(max_error(g, exact) < 1e-9);
    }
    SUBCASE("deep column, slow advection") {
        const double k0 = 4.32 / 3600.0;
        const Coefficients c(0.4653, k0);
        const oracle::SineSeries exact(0.4653, k0, 70.0, 0.335, 0.025, [](double) { return 0.025; }, 0.025);
        const SolutionGrid g = solve_flooding(0.025, 0.335, c, 70.0, VectorXd::LinSpaced(15, 0.0, 70.0), vec({900.0, 2700.0, 20000.0}));
        CHECK(max_error(g, exact) < 1e-9);
    }
    SUBCASE("upward flow (negative k0)") {
        const oracle::SineSeries exact(0.3, -0.2, 4.0, 0.6, 0.1, [](double) { return 0.1; }, 0.1);
        const SolutionGrid g = solve_flooding(0.1, 0.6, Coefficients(0.3, -0.2), 4.0, VectorXd::LinSpaced(9, 0.0, 4.0), vec({1.0, 10.0}));
        CHECK(max_error(g, exact) < 1e-9);
    }
}

TEST_CASE("general solver with tabulated initial data") {
    const initial::Tabulated tab{{{0.0, 1.0, 2.0, 5.0}, {0.0, 0.4, 0.1, 0.0}}};
    const ProfileProblem p{5.0, Coefficients(0.8, 0.3), tab, boundary::Zero{}, boundary::Zero{}};
    const oracle::SineSeries exact(0.8, 0.3, 5.0, 0.0, 0.0, [&](double x) { return tab.samples(x); }, NAN, tab.samples.at);
    const VectorXd xs = VectorXd::LinSpaced(11, 0.0, 5.0);
    const VectorXd ts = vec({0.05, 0.5, 4.0});
    for (Route route : {Route::Straddle, Route::PoleBypass}) {
        for (Representation rep : {Representation::Upper, Representation::Lower}) {
            SolverOptions o;
            o.route = route;
            o.representation = rep;
            CAPTURE(to_string(route));
            CAPTURE(to_string(rep));
            CHECK(max_error(solve_general(p, xs, ts, o), exact) < 1e-8);
        }
    }
}

TEST_CASE("general solver with constant data on both ends") {
    const ProfileProblem p{3.0, Coefficients(0.5, 0.4), initial::Constant{0.2}, boundary::Constant{0.5}, boundary::Constant{0.3}};
    const oracle::SineSeries exact(0.5, 0.4, 3.0, 0.5, 0.3, [](double) { return 0.2; }, 0.2);
    const SolutionGrid g = solve_general(p, VectorXd::LinSpaced(13, 0.0, 3.0), vec({0.1, 1.0, 10.0}));
    CHECK(max_error(g, exact) < 1e-8);
}

TEST_CASE("time-dependent surface data by superposition of step responses") {
    // theta = theta0 + int_0^t f'(s) U(x, t - s) ds, U the unit step response
    const double d0 = 0.4, k0 = 0.01, length = 20.0, theta0 = 0.05, ka = 2e-3, t = 600.0;
    const oracle::SineSeries unit(d0, k0, length, 1.0, 0.0, [](double) { return 0.0; }, 0.0);
    // surface content 1 - (1 + 2 z^2) erfc z + 2 z e^{-z^2}/sqrt(pi), z = sqrt(ka s)/2, differentiated by hand
    const auto fprime = [&](double s) {
        const double z = 0.5 * std::sqrt(ka * s);
        return 2.0 * z / s * (std::exp(-z * z) / std::sqrt(std::numbers::pi) - z * std::erfc(z));
    };
    const VectorXd xs = vec({0.5, 2.0, 5.0});
    const SolutionGrid g = solve_rainfall_flux(theta0, boundary::BraesterFlux{ka, 0.0}, Coefficients(d0, k0), length, xs, vec({t}));
    for (Eigen::Index i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        // f(0) = 0 is below theta0, so the jump -theta0 at t = 0 enters as a step too
        // f2 grows like sqrt(s), so f' is refined geometrically towards s = 0
        const auto integrand = [&](double s) { return oracle::Complex(fprime(s) * unit(x, t - s)); };
        const double duhamel = oracle::integrate_geometric(integrand, 0.0, 1.0, 1e-10).real() +
                               oracle::integrate<oracle::Complex>(integrand, 1.0, t - 1.0, 100).real() +
                               oracle::integrate<oracle::Complex>(integrand, t - 1.0, t, 20).real();
        const double exact = theta0 - theta0 * unit(x, t) + duhamel;
        CHECK(g.values(i, 0) == doctest::Approx(exact).epsilon(1e-7));
    }
}

TEST_CASE("rainfall solver agrees with the general solver") {
    const Coefficients c(0.387, 3.87e-4);
    const BoundaryData surface = boundary::BraesterFlux{3.87e-7, 0.0};
    const ProfileProblem p{300.0, c, initial::Constant{0.025}, surface, boundary::Constant{0.025}};
    const VectorXd xs = VectorXd::LinSpaced(7, 0.0, 30.0);
    const VectorXd ts = vec({300.0, 600.0});
    const SolutionGrid a = solve_rainfall_flux(0.025, surface, c, 300.0, xs, ts);
    const SolutionGrid b = solve_general(p, xs, ts);
    CHECK((a.values - b.values).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("boundary values hold by construction") {
    const Coefficients c(0.4653, 0.0012);
    const VectorXd xs = vec({0.0, 70.0});
    const SolutionGrid g = solve_flooding(0.025, 0.335, c, 70.0, xs, vec({1.0, 1000.0}));
    CHECK(g.values(0, 0) == 0.335);
    CHECK(g.values(1, 1) == 0.025);
    CHECK(g.diagnostics.front().route == "data");
}

TEST_CASE("short times recover the initial data away from the boundaries") {
    const initial::Tabulated tab{{{0.0, 1.0, 2.0, 5.0}, {0.1, 0.4, 0.1, 0.1}}};
    const ProfileProblem p{5.0, Coefficients(0.8, 0.3), tab, boundary::Constant{0.1}, boundary::Constant{0.1}};
    const VectorXd xs = vec({0.5, 1.5, 3.0, 4.0});
    const SolutionGrid g = solve_general(p, xs, vec({1e-6}));
    for (Eigen::Index i = 0; i < xs.size(); ++i) {
        // smoothing over sqrt(d0 t) ~ 1e-3 and transport k0 t ~ 3e-7 on a piecewise-linear profile
        CHECK(g.values(i, 0) == doctest::Approx(tab.samples(xs[i] - 0.3e-6)).epsilon(1e-6));
    }
}

TEST_CASE("tank problem in the transformed variable") {
    const TankParameters tank{0.001, 1e-4 / 86400.0, 0.45, 0.15, -2000.0, 5000.0};
    const double g = 1.0 - tank.eps();
    const oracle::SineSeries exact(tank.d1(), tank.k1(), tank.length, 0.0, g, [](double) { return 0.0; }, 0.0);
    const VectorXd xs = VectorXd::LinSpaced(6, 4990.0, 5000.0);
    const VectorXd ts = vec({86400.0, 864000.0});
    const SolutionGrid h = solve_tank_transformed(tank, xs, ts);
    CHECK(max_error(h, exact) < 1e-10);
    SolverOptions upper;
    upper.representation = Representation::Upper;
    CHECK((solve_tank_transformed(tank, xs, ts, upper).values - h.values).cwiseAbs().maxCoeff() < 1e-10);

    const SolutionGrid head = solve_pressure_tank(tank, xs, ts);
    CHECK(head.kind == ValueKind::PressureHead);
    CHECK(head.values(5, 0) == doctest::Approx(0.0).scale(1.0));
    for (Eigen::Index i = 0; i < xs.size(); ++i) {
        CHECK(head.values(i, 1) == doctest::Approx(std::log(h.values(i, 1) + tank.eps()) / tank.a));
    }
    CHECK_THROWS_AS(head_from_transformed(-1.0, tank), Error);
}

TEST_CASE("tank parameters are checked") {
    TankParameters bad{0.001, 1e-9, 0.15, 0.45, -2000.0, 5000.0};  // theta1 < theta0
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = TankParameters{-0.1, 1e-9, 0.45, 0.15, -2000.0, 5000.0};
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("half-line solution against the step response") {
    const double d0 = 0.4653, k0 = 0.0012;
    const VectorXd xs = vec({0.0, 1.0, 5.0, 20.0, 60.0});
    const VectorXd ts = vec({900.0, 2700.0});
    const SolutionGrid g = solve_half_line(initial::Constant{0.025}, boundary::Constant{0.335}, Coefficients(d0, k0), xs, ts);
    CHECK(max_error(g, [&](double x, double t) { return 0.025 + 0.31 * oracle::step_half_line(x, t, d0, k0); }) < 1e-10);

    const SolutionGrid pure = solve_half_line(initial::Zero{}, boundary::Constant{1.0}, Coefficients(1.0, 0.0), xs, ts);
    CHECK(max_error(pure, [](double x, double t) { return std::erfc(x / (2.0 * std::sqrt(t))); }) < 1e-10);
}

TEST_CASE("bounded solution tends to the half-line one") {
    const double d0 = 0.5, k0 = 0.02, t = 100.0;
    const double length = 20.0 * std::sqrt(d0 * t);
    const VectorXd xs = VectorXd::LinSpaced(11, 0.0, length / 4.0);
    const SolutionGrid bounded = solve_flooding(0.0, 1.0, Coefficients(d0, k0), length, xs, vec({t}));
    const SolutionGrid half = solve_half_line(initial::Zero{}, boundary::Constant{1.0}, Coefficients(d0, k0), xs, vec({t}));
    CHECK((bounded.values - half.values).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("residue integral against ray quadrature") {
    // I1 = int over the upper rays from lambda = 0 with an arc below the pole
    const double d0 = 0.4653, k0 = 0.0012, length = 5.0, x = 1.3;
    const Spectral sp(Coefficients(d0, k0), length);
    const double c = sp.c();
    const auto phi = [&](Complex lam) {
        const Complex mu = lam + Complex(0.0, c);
        return mu * std::sin((length - x) * mu) / (sp.omega(lam) * sp.delta_direct(lam));
    };
    const double theta = std::numbers::pi / 8, r = 0.25 * c;
    const Complex right = std::polar(1.0, theta), left = std::polar(1.0, std::numbers::pi - theta);
    const double reach = 40.0 / (x * std::sin(theta));
    const Complex rays = oracle::integrate_geometric([&](double s) { return phi(s * right) * right - phi(s * left) * left; }, r, reach, r);
    const Complex arc = oracle::integrate<Complex>(
        [&](double a) {
            const Complex z = std::polar(r, a);
            return phi(z) * Complex(0.0, 1.0) * z;
        },
        std::numbers::pi - theta, 2.0 * std::numbers::pi + theta, 8);
    const double closed = i1_closed(x, Coefficients(d0, k0), length);
    CHECK(std::abs(rays + arc - closed) < 1e-8 * std::abs(closed));
    CHECK(i1_closed_scaled(x, Coefficients(d0, k0), length) == doctest::Approx(closed * std::exp(-c * (length - x))));
}

TEST_CASE("grid checks and threading") {
    const Coefficients c(0.5, 1.0);
    CHECK_THROWS_AS(solve_flooding(0.0, 1.0, c, 0.05, vec({0.1}), vec({0.1})), Error);
    CHECK_THROWS_AS(solve_flooding(0.0, 1.0, c, 0.05, vec({0.01}), vec({-1.0})), Error);
    const VectorXd xs = VectorXd::LinSpaced(9, 0.0, 0.05);
    const VectorXd ts = vec({0.01, 0.1});
    SolverOptions seq;
    seq.sequential = true;
    SolverOptions par;
    par.threads = 3;
    const SolutionGrid a = solve_flooding(0.0, 1.0, c, 0.05, xs, ts, seq);
    const SolutionGrid b = solve_flooding(0.0, 1.0, c, 0.05, xs, ts, par);
    CHECK((a.values.array() == b.values.array()).all());
    CHECK(a.diagnostics.size() == 18);
    CHECK(a.summary().nodes > 0);
}
