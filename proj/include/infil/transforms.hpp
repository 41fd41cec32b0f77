#pragma once

// Spectral transforms of the initial and boundary data.
//
// Boundary data enter the solution only through the damped transform
//   e^{-w t} * int_0^t e^{w tau} f(tau) dtau = int_0^t e^{-w s} f(t - s) ds,
// which stays bounded by sup|f| * t for Re(w) >= 0. The undamped integral is
// never formed.

#include <cstddef>

#include "infil/problem.hpp"

namespace infil {

/// int_0^L e^{-i lambda y} theta0(y) dy
Complex hat_theta0(const InitialData& data, double length, Complex lambda);

/// int_0^L e^{-i lambda (y - L)} theta0(y) dy, i.e. e^{i lambda L} hat_theta0; bounded for Im(lambda) >= 0.
Complex hat_theta0_anchored(const InitialData& data, double length, Complex lambda);

/// hat_theta0 of the problem's own initial data.
inline Complex hat_theta0(const ProfileProblem& problem, Complex lambda) {
    return hat_theta0(problem.initial, problem.length, lambda);
}

/// c (e^{w t} - 1) / w
Complex tilde_const(double c, Complex w, double t);

/// Surface water content of the rainfall scenario, 0 at t = 0 rising to 1.
double braester_f2(double t, double ka);

struct TimeTransformOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-15;
    std::size_t max_nodes = 10000;
};

class TimeTransform {
public:
    explicit TimeTransform(BoundaryData boundary, TimeTransformOptions options = {})
        : boundary_(std::move(boundary)), options_(options) {}

    const BoundaryData& boundary() const { return boundary_; }

    /// Damped transform e^{-w t} int_0^t e^{w tau} f(tau) dtau.
    Complex damped(Complex w, double t) const;

    /// int_0^t e^{-w s} (f(t - s) - f(t)) ds, the part of the damped transform
    /// left over after f(t) (1 - e^{-w t}) / w is taken out. Zero for constant data
    /// and entire in w.
    Complex remainder(Complex w, double t) const;

    /// True when remainder() vanishes identically.
    bool is_constant() const;

private:
    BoundaryData boundary_;
    TimeTransformOptions options_;
};

/// Free-function form of TimeTransform::damped.
inline Complex time_transform(const TimeTransform& tt, Complex w, double t) { return tt.damped(w, t); }

}  // namespace infil
