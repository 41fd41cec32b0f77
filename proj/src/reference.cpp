#include "infil/reference.hpp"

#include <cmath>
#include <sstream>

#include "infil/special.hpp"

namespace infil {

double philip_profile(double x, double t, double d0, double kappa) {
    if (!(t > 0.0) || !(d0 > 0.0) || x < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "philip profile needs t > 0, d0 > 0, x >= 0");
    }
    const double s = 2.0 * std::sqrt(d0 * t);
    const double z1 = (x - kappa * t) / s;
    const double z2 = (x + kappa * t) / s;
    double second;
    if (z2 > 0.0) {
        // e^{kappa x/d0} erfc(z2) = e^{kappa x/d0 - z2^2} erfcx(z2) = e^{-z1^2} erfcx(z2)
        second = std::exp(-z1 * z1) * special::erfcx(z2);
    } else {
        second = std::exp(kappa * x / d0) * std::erfc(z2);
    }
    return 0.5 * (std::erfc(z1) + second);
}

double philip_theta(double x, double t, double d0, double k0, double theta0, double theta1) {
    if (!(theta1 > theta0)) throw Error(ErrorCode::InvalidArgument, "philip profile needs theta1 > theta0");
    return philip_profile(x, t, d0, k0 / (theta1 - theta0));
}

void SeriesControl::validate() const {
    if (max_terms < 1 || !(tail_tol > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "series control needs max_terms >= 1 and tail_tol > 0");
    }
}

SeriesValue tracy_transformed(double x, double t, const TankParameters& params, const SeriesControl& ctl) {
    params.validate();
    ctl.validate();
    if (!(t > 0.0)) throw Error(ErrorCode::InvalidArgument, "series needs t > 0");
    const double a = params.a;
    const double length = params.length;
    const double d1 = params.d1();
    const double g = 1.0 - params.eps();
    if (x <= 0.0) return {0.0, 0, 0.0};
    if (x >= length) return {g, 0, 0.0};

    // e^{a(L-x)/2} sinh(ax/2)/sinh(aL/2)
    const double steady = std::expm1(-a * x) / std::expm1(-a * length);
    const double k1 = kPi / length;
    const double prefactor = 2.0 * d1 / length;
    const double shift = 0.5 * a * (length - x);
    double sum = 0.0;
    double tail = 0.0;
    std::size_t k = 1;
    for (;; ++k) {
        if (k > ctl.max_terms) {
            std::ostringstream msg;
            msg << "eigenfunction series not converged after " << ctl.max_terms << " terms (tail " << tail << ")";
            throw Error(ErrorCode::SeriesNotConverged, msg.str());
        }
        const double lam = k1 * static_cast<double>(k);
        const double mu = d1 * (0.25 * a * a + lam * lam);
        const double decay = std::exp(shift - mu * t);
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        sum += sign * (lam / mu) * std::sin(lam * x) * decay;
        // remaining terms: lam/mu <= 1/(d1 lam), ratio of successive exponentials e^{-d1 k1^2 (2k+1) t}
        const double bound = prefactor * decay / (d1 * lam);
        const double ratio = std::exp(-d1 * k1 * k1 * (2.0 * static_cast<double>(k) + 1.0) * t);
        tail = ratio < 1.0 ? bound * ratio / (1.0 - ratio) : bound * static_cast<double>(ctl.max_terms);
        if (tail < ctl.tail_tol) break;
    }
    return {g * (steady + prefactor * sum), k, g * tail};
}

SeriesValue tracy_series_detailed(double x, double t, const TankParameters& params, const SeriesControl& ctl) {
    SeriesValue v = tracy_transformed(x, t, params, ctl);
    v.value = head_from_transformed(v.value, params);
    return v;
}

}  // namespace infil
