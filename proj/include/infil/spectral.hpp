#pragma once

// Dispersion relation, invariant map and the determinant of the boundary
// system for u_t + k0 u_x = d0 u_xx on (0, L).
//
// Everything is written around the shifted spectral variable
//   mu = lambda + i c,   c = k0 / (2 d0),
// in which omega = d0 (mu^2 + c^2), nu(lambda) + i c = -mu and
// Delta = -2i e^{-cL} sin(mu L).

#include <cmath>
#include <complex>
#include <vector>

#include "infil/core.hpp"

namespace infil {

template <typename Real = double>
struct TransportCoefficients {
    Real d0;
    Real k0;

    TransportCoefficients(Real diffusivity, Real advection) : d0(diffusivity), k0(advection) {
        if (!(d0 > Real(0)) || !std::isfinite(static_cast<double>(d0))) {
            throw Error(ErrorCode::InvalidArgument, "d0 must be positive and finite");
        }
        if (!std::isfinite(static_cast<double>(k0))) {
            throw Error(ErrorCode::InvalidArgument, "k0 must be finite");
        }
    }

    /// Half the Peclet rate, c = k0 / (2 d0).
    Real shift() const { return k0 / (Real(2) * d0); }
};

/// Value represented as mantissa * exp(exponent); used where the plain value may overflow.
template <typename Real = double>
struct Scaled {
    std::complex<Real> mantissa;
    Real exponent;

    std::complex<Real> value() const { return mantissa * std::exp(exponent); }
};

template <typename Real = double>
class SpectralContext {
public:
    using C = std::complex<Real>;

    SpectralContext(TransportCoefficients<Real> coeffs, Real length)
        : coeffs_(coeffs), length_(length) {
        if (!(length_ > Real(0)) || !std::isfinite(static_cast<double>(length_))) {
            throw Error(ErrorCode::InvalidArgument, "length must be positive and finite");
        }
    }

    const TransportCoefficients<Real>& coeffs() const { return coeffs_; }
    Real length() const { return length_; }
    Real c() const { return coeffs_.shift(); }

    C omega(C lambda) const { return coeffs_.d0 * lambda * lambda + C(0, 1) * coeffs_.k0 * lambda; }

    /// omega written in mu; exact d0 (mu^2 + c^2) without the cancellation of the lambda form.
    C omega_mu(C mu) const { return coeffs_.d0 * (mu * mu + c() * c()); }

    C nu(C lambda) const { return -lambda - C(0, coeffs_.k0 / coeffs_.d0); }

    C mu(C lambda) const { return lambda + C(0, c()); }
    C lambda_of_mu(C mu) const { return mu - C(0, c()); }

    /// Delta split as mantissa * e^{exponent} with the dominant exponential factored out.
    Scaled<Real> delta_scaled(C lambda) const {
        const C m = mu(lambda);
        const C two_i_mu_l = C(0, 2) * m * length_;
        // Delta = e^{-cL} (e^{-i mu L} - e^{i mu L})
        if (m.imag() >= Real(0)) {
            // |e^{-i mu L}| = e^{Im(mu) L} dominates
            const C phase = std::exp(C(0, -m.real() * length_));
            return {-phase * expm1c(two_i_mu_l), -c() * length_ + m.imag() * length_};
        }
        const C phase = std::exp(C(0, m.real() * length_));
        return {phase * expm1c(-two_i_mu_l), -c() * length_ - m.imag() * length_};
    }

    C delta(C lambda) const { return delta_scaled(lambda).value(); }

    /// Literal e^{-i lambda L} - e^{-i nu(lambda) L}; overflows for large |Im lambda|.
    C delta_direct(C lambda) const {
        return std::exp(C(0, -1) * lambda * length_) - std::exp(C(0, -1) * nu(lambda) * length_);
    }

    /// Zeros of Delta: lambda_n = -i c + n pi / L.
    std::vector<C> delta_roots(int n_first, int n_last) const {
        std::vector<C> roots;
        for (int n = n_first; n <= n_last; ++n) {
            roots.emplace_back(Real(n) * std::numbers::pi_v<Real> / length_, -c());
        }
        return roots;
    }

private:
    static C expm1c(C z) {
        const Real s = std::sin(z.imag() / Real(2));
        return {std::expm1(z.real()) * std::cos(z.imag()) - Real(2) * s * s,
                std::exp(z.real()) * std::sin(z.imag())};
    }

    TransportCoefficients<Real> coeffs_;
    Real length_;
};

using Coefficients = TransportCoefficients<double>;
using Spectral = SpectralContext<double>;

/// sin(a mu) / sin(L mu) for 0 <= a <= L without overflow for large |Im mu|.
Complex sin_ratio(double a, double length, Complex mu);

}  // namespace infil
