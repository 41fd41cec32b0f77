#pragma once

// Classical closed-form and series solutions used as cross-checks.

#include <cstddef>

#include "infil/solver.hpp"

namespace infil {

/// Dimensionless half-line profile for a step rise of surface content with
/// advection speed kappa:
///   1/2 [erfc((x - kappa t)/(2 sqrt(d0 t))) + e^{kappa x/d0} erfc((x + kappa t)/(2 sqrt(d0 t)))]
double philip_profile(double x, double t, double d0, double kappa);

/// Same profile with kappa = k0 / (theta1 - theta0).
double philip_theta(double x, double t, double d0, double k0, double theta0, double theta1);

struct SeriesControl {
    std::size_t max_terms = 10000;
    double tail_tol = 1e-12;

    void validate() const;
};

struct SeriesValue {
    double value = 0.0;
    std::size_t terms = 0;
    double tail = 0.0;
};

/// Eigenfunction series for e^{a h} - eps of the tank problem.
SeriesValue tracy_transformed(double x, double t, const TankParameters& params, const SeriesControl& ctl);

/// Pressure head from the eigenfunction series, (1/a) ln(transformed + eps).
SeriesValue tracy_series_detailed(double x, double t, const TankParameters& params,
                                  const SeriesControl& ctl);

inline double tracy_series(double x, double t, const TankParameters& params, const SeriesControl& ctl) {
    return tracy_series_detailed(x, t, params, ctl).value;
}

}  // namespace infil
