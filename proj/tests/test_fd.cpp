#include <doctest.h>

#include <cmath>
#include <numbers>

#include "infil/fd.hpp"
#include "oracles.hpp"

using namespace infil;
using Eigen::VectorXd;

TEST_CASE("node placement") {
    const VectorXd u = fd_nodes(2.0, 9, 0.0);
    REQUIRE(u.size() == 11);
    CHECK(u[0] == 0.0);
    CHECK(u[10] == 2.0);
    CHECK(u[5] == doctest::Approx(1.0));
    const VectorXd s = fd_nodes(2.0, 99, 3.0);
    CHECK(s[0] == 0.0);
    CHECK(s[100] == 2.0);
    for (Eigen::Index i = 1; i < s.size(); ++i) CHECK(s[i] > s[i - 1]);
    // clustered at both ends
    CHECK(s[1] - s[0] < 0.5 * (s[51] - s[50]));
    CHECK(auto_stretch(2.0, 99, 10.0) == 0.0);
    CHECK(auto_stretch(2.0, 99, 1e-4) > 0.0);
}

TEST_CASE("second-order convergence on a smooth decaying mode") {
    const double d0 = 0.3, k0 = 0.2, length = 2.0, c = k0 / (2 * d0), t = 0.5;
    const double beta = std::numbers::pi / length;
    // dense samples of e^{c x} sin(beta x); the interpolation error is far below the FD error
    initial::Tabulated u0;
    for (int i = 0; i <= 20000; ++i) {
        const double x = length * i / 20000.0;
        u0.samples.at.push_back(x);
        u0.samples.value.push_back(std::exp(c * x) * std::sin(beta * x));
    }
    const ProfileProblem p{length, Coefficients(d0, k0), u0, boundary::Zero{}, boundary::Zero{}};
    const VectorXd xs = VectorXd::LinSpaced(5, 0.0, length);
    VectorXd ts(1);
    ts << t;
    const auto exact = [&](double x) { return std::exp(c * x - d0 * (c * c + beta * beta) * t) * std::sin(beta * x); };
    double prev = 0.0;
    for (std::size_t nx : {39, 79, 159}) {
        FdConfig cfg;
        cfg.nx = nx;
        cfg.nt = (nx + 1) / 4;
        cfg.stretch = 0.0;
        cfg.startup_substeps = 0;
        const FdSolution s = crank_nicolson(p, cfg, xs, ts);
        double err = 0.0;
        for (Eigen::Index i = 0; i < xs.size(); ++i) err = std::max(err, std::abs(s.grid.values(i, 0) - exact(xs[i])));
        if (prev > 0.0) CHECK(prev / err == doctest::Approx(4.0).epsilon(0.1));
        prev = err;
    }
}

TEST_CASE("refined oracle agrees with the eigenfunction series") {
    const double k0 = 4.32 / 3600.0;
    const ProfileProblem p{70.0, Coefficients(0.4653, k0), initial::Constant{0.025}, boundary::Constant{0.335},
                           boundary::Constant{0.025}};
    const oracle::SineSeries exact(0.4653, k0, 70.0, 0.335, 0.025, [](double) { return 0.025; }, 0.025);
    const VectorXd xs = VectorXd::LinSpaced(15, 0.0, 70.0);
    VectorXd ts(2);
    ts << 900.0, 2700.0;
    FdConfig cfg;
    cfg.nx = 400;
    const FdSolution s = refine_until(p, cfg, 1e-6, xs, ts);
    CHECK(s.info.achieved < 1e-6);
    CHECK(s.info.peclet < 1.0);
    for (Eigen::Index i = 0; i < xs.size(); ++i) {
        for (Eigen::Index j = 0; j < ts.size(); ++j) {
            CHECK(s.grid.values(i, j) == doctest::Approx(exact(xs[i], ts[j])).epsilon(1e-5).scale(1e-3));
        }
    }
    CHECK(s.grid.values(0, 0) == 0.335);
    CHECK(s.grid.values(14, 1) == 0.025);
}

TEST_CASE("Peclet number is brought below one") {
    const ProfileProblem p{10.0, Coefficients(0.01, 1.0), initial::Zero{}, boundary::Constant{1.0}, boundary::Zero{}};
    FdConfig cfg;
    cfg.nx = 50;
    cfg.stretch = 0.0;
    VectorXd ts(1);
    ts << 0.5;
    const FdSolution s = crank_nicolson(p, cfg, VectorXd::LinSpaced(3, 0.0, 10.0), ts);
    CHECK(s.info.peclet < 1.0);
    CHECK(s.info.nx > 50);
    cfg.max_nx = 100;
    CHECK_THROWS_AS(crank_nicolson(p, cfg, VectorXd::LinSpaced(3, 0.0, 10.0), ts), Error);
}

TEST_CASE("configuration and convergence failures") {
    FdConfig cfg;
    cfg.nx = 1;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = FdConfig{};
    cfg.refinement_factor = 1.0;
    CHECK_THROWS_AS(cfg.validate(), Error);

    const ProfileProblem p{1.0, Coefficients(1.0, 0.0), initial::Zero{}, boundary::Constant{1.0}, boundary::Zero{}};
    cfg = FdConfig{};
    cfg.nx = 20;
    cfg.max_refinements = 1;
    VectorXd ts(1);
    ts << 0.1;
    try {
        refine_until(p, cfg, 1e-14, VectorXd::LinSpaced(5, 0.0, 1.0), ts);
        FAIL("expected NoConvergence");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoConvergence);
    }
}
