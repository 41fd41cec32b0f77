#include "infil/contour.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "infil/quadrature.hpp"

namespace infil {

void ContourConfig::validate() const {
    if (!(ray_angle > 0.0 && ray_angle < kPi / 4.0)) {
        throw Error(ErrorCode::InvalidArgument, "ray_angle must lie in (0, pi/4)");
    }
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "tolerances must be positive");
    }
    if (max_nodes < 15) throw Error(ErrorCode::InvalidArgument, "max_nodes too small");
    if (!(truncation_safety > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "truncation_safety must be positive");
    }
}

ContourResult& ContourResult::operator+=(const ContourResult& other) {
    value += other.value;
    error += other.error;
    tail += other.tail;
    radius = std::max(radius, other.radius);
    nodes += other.nodes;
    extensions += other.extensions;
    residue += other.residue;
    return *this;
}

namespace {

constexpr int kMaxExtensions = 8;

struct Decay {
    double gaussian = 0.0;  // coefficient of s^2 in the exponent along the path
    double exponential = 0.0;
    double offset = 0.0;    // shift of the path start relative to the decay origin
};

double initial_radius(const ContourConfig& cfg, const Decay& decay) {
    const double log_tol = std::log(1.0 / cfg.abs_tol);
    double r = std::numeric_limits<double>::infinity();
    if (decay.gaussian > 0.0) r = std::min(r, cfg.truncation_safety * std::sqrt(log_tol / decay.gaussian));
    if (decay.exponential > 0.0) r = std::min(r, cfg.truncation_safety * log_tol / decay.exponential);
    if (!std::isfinite(r)) {
        throw Error(ErrorCode::InvalidArgument, "ray integral needs a positive decay scale or rate");
    }
    return r + decay.offset;
}

double tail_estimate(const RealToComplex& g, double r, const Decay& decay) {
    double length = r;
    if (decay.gaussian > 0.0) length = std::min(length, 1.0 / (2.0 * decay.gaussian * r));
    if (decay.exponential > 0.0) length = std::min(length, 1.0 / decay.exponential);
    double peak = 0.0;
    for (double f : {1.0, 1.1, 1.25}) {
        const double m = std::abs(g(f * r));
        peak = std::max(peak, std::isfinite(m) ? m : std::numeric_limits<double>::infinity());
    }
    return peak * length;
}

// int_{s0}^{R} g(s) ds with R from the decay model, verified and extended at runtime.
ContourResult truncated_integral(const RealToComplex& g, double s0, const ContourConfig& cfg,
                                 const Decay& decay, double inner_scale) {
    ContourResult out;
    double r = std::max(initial_radius(cfg, decay), 2.0 * s0);
    double tail = tail_estimate(g, r, decay);
    while (tail > cfg.abs_tol && out.extensions < kMaxExtensions) {
        r *= 2.0;
        ++out.extensions;
        tail = tail_estimate(g, r, decay);
    }
    if (!(tail <= 10.0 * cfg.abs_tol)) {
        std::ostringstream msg;
        msg << "integrand still of size " << tail << " at truncation radius " << r;
        throw Error(ErrorCode::TruncationDominated, msg.str());
    }
    std::vector<double> pts = geometric_points(s0, r, inner_scale);
    const QuadratureOptions opt{cfg.rel_tol, cfg.abs_tol, cfg.max_nodes};
    const QuadratureResult q = integrate_adaptive(g, pts, opt);
    out.value = q.value;
    out.error = q.error;
    out.nodes = q.nodes;
    out.tail = tail;
    out.radius = r;
    return out;
}

Decay ray_decay(const ContourConfig& cfg, double decay_scale, double exp_rate, Complex vertex) {
    const double c2 = std::cos(2.0 * cfg.ray_angle);
    const double s = std::sin(cfg.ray_angle);
    Decay d;
    d.gaussian = decay_scale > 0.0 ? decay_scale * c2 : 0.0;
    d.exponential = exp_rate;
    // the linear term 2 |Im v| s sin(theta) of Re(mu^2) moves the Gaussian peak outward
    d.offset = decay_scale > 0.0 ? 2.0 * std::abs(vertex.imag()) * s / c2 : 0.0;
    return d;
}

// Combined integrand of both rays as a function of the distance s from the vertex.
RealToComplex ray_pair(const ComplexFn& phi, Complex vertex, double theta, bool lower) {
    const Complex e = std::polar(1.0, theta);
    const Complex em = std::conj(e);
    if (!lower) {
        return [=, &phi](double s) { return e * phi(vertex + e * s) + em * phi(vertex - em * s); };
    }
    return [=, &phi](double s) { return -(em * phi(vertex + em * s) + e * phi(vertex - e * s)); };
}

}  // namespace

ContourResult integrate_upper_rays(const ComplexFn& integrand, const ContourConfig& cfg,
                                   double decay_scale, const RayOptions& options) {
    cfg.validate();
    const Decay d = ray_decay(cfg, decay_scale, options.exp_rate, options.vertex);
    return truncated_integral(ray_pair(integrand, options.vertex, cfg.ray_angle, false), 0.0, cfg, d,
                              options.inner_scale);
}

ContourResult integrate_lower_rays(const ComplexFn& integrand, const ContourConfig& cfg,
                                   double decay_scale, const RayOptions& options) {
    cfg.validate();
    const Decay d = ray_decay(cfg, decay_scale, options.exp_rate, options.vertex);
    return truncated_integral(ray_pair(integrand, options.vertex, cfg.ray_angle, true), 0.0, cfg, d,
                              options.inner_scale);
}

ContourResult integrate_real_line(const ComplexFn& integrand, const ContourConfig& cfg,
                                  double decay_scale) {
    cfg.validate();
    if (!(decay_scale > 0.0)) {
        throw Error(ErrorCode::DegenerateTime, "real-line integral needs t > 0");
    }
    Decay d;
    d.gaussian = decay_scale;
    const RealToComplex g = [&integrand](double s) {
        return integrand(Complex(s, 0.0)) + integrand(Complex(-s, 0.0));
    };
    return truncated_integral(g, 0.0, cfg, d, 0.0);
}

ContourResult arc_contribution(const ComplexFn& integrand, const ContourConfig& cfg, Complex center,
                               double radius, double alpha_from, double alpha_to) {
    const RealToComplex g = [&](double alpha) {
        const Complex dz = Complex(0.0, radius) * std::polar(1.0, alpha);
        return integrand(center + radius * std::polar(1.0, alpha)) * dz;
    };
    const QuadratureOptions opt{cfg.rel_tol, cfg.abs_tol, cfg.max_nodes};
    const double lo = std::min(alpha_from, alpha_to);
    const double hi = std::max(alpha_from, alpha_to);
    std::vector<double> pts;
    const int pieces = std::max(1, static_cast<int>(std::ceil((hi - lo) / (kPi / 4.0))));
    for (int k = 0; k <= pieces; ++k) pts.push_back(lo + (hi - lo) * k / pieces);
    QuadratureResult q = integrate_adaptive(g, pts, opt);
    ContourResult out;
    out.value = alpha_to >= alpha_from ? q.value : -q.value;
    out.error = q.error;
    out.nodes = q.nodes;
    out.radius = radius;
    return out;
}

std::vector<Complex> laurent_coefficients(const ComplexFn& integrand, Complex center, double radius,
                                          int samples) {
    std::vector<Complex> values(samples);
    for (int j = 0; j < samples; ++j) {
        const double alpha = 2.0 * kPi * (j + 0.5) / samples;
        values[j] = integrand(center + radius * std::polar(1.0, alpha));
    }
    std::vector<Complex> coeffs(samples);
    for (int m = 0; m < samples; ++m) {
        const int k = m - samples / 2;
        Complex sum{};
        for (int j = 0; j < samples; ++j) {
            sum += values[j] * std::polar(1.0, -k * 2.0 * kPi * (j + 0.5) / samples);
        }
        coeffs[m] = sum / static_cast<double>(samples) * std::pow(radius, -k);
    }
    return coeffs;
}

Complex laurent_coefficient(const ComplexFn& integrand, Complex center, double radius, int k,
                            int samples) {
    return laurent_coefficients(integrand, center, radius, samples)[k + samples / 2];
}

ContourResult bypass_origin(const ComplexFn& integrand, const ContourConfig& cfg, double radius,
                            const BypassOptions& options) {
    cfg.validate();
    if (!(radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "bypass radius must be positive");

    // Laurent check: the sampled coefficients must decay towards the aliasing band.
    constexpr int n = 64;
    const std::vector<Complex> coeffs = laurent_coefficients(integrand, options.vertex, radius, n);
    std::vector<double> mags(n);
    double peak = 0.0;
    for (int j = 0; j < n; ++j) {
        mags[j] = std::abs(coeffs[j]) * std::pow(radius, j - n / 2);
        if (!std::isfinite(mags[j])) {
            throw Error(ErrorCode::SingularityNotResolved, "integrand not finite on the bypass circle");
        }
        peak = std::max(peak, mags[j]);
    }
    double band = 0.0;
    for (int j = 0; j < 8; ++j) band = std::max({band, mags[j], mags[n - 1 - j]});
    if (band > 1e-8 * peak) {
        std::ostringstream msg;
        msg << "Laurent expansion on radius " << radius << " does not converge (edge/peak "
            << band / peak << ")";
        throw Error(ErrorCode::SingularityNotResolved, msg.str());
    }

    const double theta = cfg.ray_angle;
    const Decay d = ray_decay(cfg, options.decay_scale, options.exp_rate, options.vertex);
    const RealToComplex g = ray_pair(integrand, options.vertex, theta, options.lower);
    ContourResult out = truncated_integral(g, radius, cfg, d, options.inner_scale);

    // upper: from the left ray (angle pi - theta) round below to the right ray (2 pi + theta);
    // lower: from the right ray (-theta) round above to the left ray (pi + theta)
    const ContourResult arc =
        options.lower ? arc_contribution(integrand, cfg, options.vertex, radius, -theta, kPi + theta)
                      : arc_contribution(integrand, cfg, options.vertex, radius, kPi - theta,
                                         2.0 * kPi + theta);
    out += arc;
    out.residue = coeffs[n / 2 - 1];
    return out;
}

}  // namespace infil
