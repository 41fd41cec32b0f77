#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature for complex-valued
// functions of a real variable.

#include <cstddef>
#include <functional>
#include <span>

#include "infil/core.hpp"

namespace infil {

using RealToComplex = std::function<Complex(double)>;

struct QuadratureOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    std::size_t max_nodes = 20000;
};

struct QuadratureResult {
    Complex value{};
    double error = 0.0;
    std::size_t nodes = 0;
};

/// Integrates f over [points.front(), points.back()], splitting first at every
/// interior point. Throws NonConvergent when the node budget runs out.
QuadratureResult integrate_adaptive(const RealToComplex& f, std::span<const double> points,
                                    const QuadratureOptions& options);

QuadratureResult integrate_adaptive(const RealToComplex& f, double a, double b,
                                    const QuadratureOptions& options);

/// Breakpoints a, a + h, a + 2h, a + 4h, ... up to b (plus b), for integrands with
/// structure on scale h near a.
std::vector<double> geometric_points(double a, double b, double h);

}  // namespace infil
