#pragma once

// Integrals over the real line and over the two-ray contours that stand in for
// the hyperbolic boundaries dD+ (upper half-plane, traversed left to right) and
// dD- (lower half-plane, traversed right to left).
//
// Upper rays leave the vertex v at angles theta and pi - theta:
//   int_{dD+} phi = int_0^inf e^{i theta} phi(v + e^{i theta} s) + e^{-i theta} phi(v - e^{-i theta} s) ds
// and the lower rays are their mirror images, with the orientation reversed.

#include <cstddef>
#include <functional>
#include <vector>

#include "infil/core.hpp"

namespace infil {

using ComplexFn = std::function<Complex(Complex)>;

struct ContourConfig {
    double ray_angle = kPi / 8.0;
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    std::size_t max_nodes = 20000;
    double truncation_safety = 1.5;

    void validate() const;
};

struct ContourResult {
    Complex value{};
    double error = 0.0;      ///< quadrature error estimate
    double tail = 0.0;       ///< estimated truncation error beyond the radius
    double radius = 0.0;     ///< final truncation radius along each ray
    std::size_t nodes = 0;
    int extensions = 0;      ///< how often the radius had to be doubled
    Complex residue{};       ///< local residue at the vertex (bypass only)

    ContourResult& operator+=(const ContourResult& other);
};

/// Decay information for choosing the truncation radius along a ray.
struct RayOptions {
    Complex vertex{};
    /// Rate of an additional e^{-rate * s} factor; used when decay_scale is zero.
    double exp_rate = 0.0;
    /// Adds geometric breakpoints from the vertex at this scale.
    double inner_scale = 0.0;
};

/// decay_scale: integrand ~ e^{-decay_scale * Re(mu^2)}, typically d0 * t.
ContourResult integrate_upper_rays(const ComplexFn& integrand, const ContourConfig& cfg,
                                   double decay_scale, const RayOptions& options = {});

ContourResult integrate_lower_rays(const ComplexFn& integrand, const ContourConfig& cfg,
                                   double decay_scale, const RayOptions& options = {});

/// Throws DegenerateTime when decay_scale <= 0.
ContourResult integrate_real_line(const ComplexFn& integrand, const ContourConfig& cfg,
                                  double decay_scale);

/// int phi dz along z = v + radius e^{i alpha}, alpha from alpha_from to alpha_to.
ContourResult arc_contribution(const ComplexFn& integrand, const ContourConfig& cfg, Complex center,
                               double radius, double alpha_from, double alpha_to);

struct BypassOptions {
    Complex vertex{};
    bool lower = false;  ///< lower contour (arc above the vertex) instead of upper (arc below)
    double decay_scale = 0.0;
    double exp_rate = 0.0;
    double inner_scale = 0.0;
};

/// Two-ray contour through the vertex with the vertex cut out by a circular arc of
/// the given radius: below it for the upper contour, above it for the lower one.
/// The local Laurent expansion on the arc circle must converge, otherwise
/// SingularityNotResolved; its -1 coefficient is reported as the residue.
ContourResult bypass_origin(const ComplexFn& integrand, const ContourConfig& cfg, double radius,
                            const BypassOptions& options);

/// Laurent coefficients a_k, k = -samples/2 .. samples/2 - 1, of phi around center
/// from samples on a circle (index k + samples/2).
std::vector<Complex> laurent_coefficients(const ComplexFn& integrand, Complex center, double radius,
                                          int samples = 64);

/// Single Laurent coefficient a_k.
Complex laurent_coefficient(const ComplexFn& integrand, Complex center, double radius, int k,
                            int samples = 64);

}  // namespace infil
