#include "infil/spectral.hpp"

#include "infil/special.hpp"

namespace infil {

Complex sin_ratio(double a, double length, Complex mu) {
    if (std::abs(mu) * length < 1e-12) {
        return a / length;
    }
    // sin(a mu)/sin(L mu) = e^{i(L-a)mu} expm1(2i a mu)/expm1(2i L mu) for Im mu >= 0
    const double sign = mu.imag() >= 0.0 ? 1.0 : -1.0;
    const Complex j{0.0, 2.0 * sign};
    return std::exp(Complex(0.0, sign) * (length - a) * mu) * special::expm1(j * a * mu) /
           special::expm1(j * length * mu);
}

}  // namespace infil
