#include "infil/transforms.hpp"

#include <cmath>
#include <vector>

#include "infil/quadrature.hpp"
#include "infil/special.hpp"

namespace infil {

namespace {

// int_a^b e^{-w (y - anchor)} (va + slope (y - a)) dy, expanded about the end
// where the exponential is smaller so no intermediate overflows
Complex segment(Complex w, double anchor, double a, double b, double va, double slope) {
    const double h = b - a;
    if (w.real() >= 0.0) {
        return std::exp(-w * (a - anchor)) *
               (va * special::exp_integral0(w, h) + slope * special::exp_integral1(w, h));
    }
    const double vb = va + slope * h;
    return std::exp(-w * (b - anchor)) *
           (vb * special::exp_integral0(-w, h) - slope * special::exp_integral1(-w, h));
}

// int over [0, L] of e^{-i lambda (y - anchor)} theta0(y) dy
Complex hat_with_anchor(const InitialData& data, double length, Complex lambda, double anchor) {
    const Complex w = kI * lambda;
    if (std::holds_alternative<initial::Zero>(data)) {
        return 0.0;
    }
    if (const auto* c = std::get_if<initial::Constant>(&data)) {
        if (std::abs(lambda) * length < 1e-8) {
            // removable limit, first-order accurate beyond the threshold
            return c->value * length * (1.0 - w * (0.5 * length - anchor));
        }
        return segment(w, anchor, 0.0, length, c->value, 0.0);
    }
    const auto& s = std::get<initial::Tabulated>(data).samples;
    Complex sum{};
    for (std::size_t j = 0; j + 1 < s.at.size(); ++j) {
        const double a = std::max(s.at[j], 0.0);
        const double b = std::min(s.at[j + 1], length);
        if (!(b > a)) continue;
        const double slope = (s.value[j + 1] - s.value[j]) / (s.at[j + 1] - s.at[j]);
        sum += segment(w, anchor, a, b, s.value[j] + slope * (a - s.at[j]), slope);
    }
    return sum;
}

}  // namespace

Complex hat_theta0(const InitialData& data, double length, Complex lambda) {
    return hat_with_anchor(data, length, lambda, 0.0);
}

Complex hat_theta0_anchored(const InitialData& data, double length, Complex lambda) {
    return hat_with_anchor(data, length, lambda, length);
}

Complex tilde_const(double c, Complex w, double t) {
    const Complex wt = w * t;
    if (std::abs(wt) < 1e-6) {
        return c * t * (1.0 + wt / 2.0 + wt * wt / 6.0);
    }
    return c * special::expm1(wt) / w;
}

double braester_f2(double t, double ka) {
    if (t <= 0.0) return 0.0;
    const double z = 0.5 * std::sqrt(ka * t);
    // 1/2 [erfc(-z) - (1 + 4z^2) erfc(z) + 4 z e^{-z^2}/sqrt(pi)] with erfc(-z) = 2 - erfc(z)
    const double ez = std::erfc(z);
    return 1.0 - (1.0 + 2.0 * z * z) * ez + 2.0 * z * std::exp(-z * z) / std::sqrt(kPi);
}

bool TimeTransform::is_constant() const {
    return std::holds_alternative<boundary::Zero>(boundary_) ||
           std::holds_alternative<boundary::Constant>(boundary_);
}

Complex TimeTransform::damped(Complex w, double t) const {
    if (t < 0.0) throw Error(ErrorCode::InvalidArgument, "time transform needs t >= 0");
    if (t == 0.0) return 0.0;
    return evaluate(boundary_, t) * special::exp_integral0(w, t) + remainder(w, t);
}

Complex TimeTransform::remainder(Complex w, double t) const {
    if (t <= 0.0 || is_constant()) return 0.0;
    const double ft = evaluate(boundary_, t);

    if (const auto* tab = std::get_if<boundary::Tabulated>(&boundary_)) {
        // exact per segment: tau in [ta, tb], s = t - tau, u = tb - tau
        const auto& s = tab->samples;
        Complex sum{};
        auto segment = [&](double ta, double tb, double fb, double slope) {
            const double h = tb - ta;
            if (!(h > 0.0)) return;
            sum += std::exp(-w * (t - tb)) *
                   ((fb - ft) * special::exp_integral0(w, h) - slope * special::exp_integral1(w, h));
        };
        for (std::size_t j = 0; j + 1 < s.at.size() && s.at[j] < t; ++j) {
            const double tb = std::min(s.at[j + 1], t);
            const double slope = (s.value[j + 1] - s.value[j]) / (s.at[j + 1] - s.at[j]);
            segment(s.at[j], tb, s(tb), slope);
        }
        if (s.at.back() < t) segment(s.at.back(), t, s.value.back(), 0.0);
        return sum;
    }

    const auto& b = std::get<boundary::BraesterFlux>(boundary_);
    const double ka = b.ka;
    auto integrand = [&](double s) -> Complex {
        return std::exp(-w * s) * (braester_f2(t - s, ka) - braester_f2(t, ka));
    };
    // structure on scale 1/|w| near s = 0 and a square-root onset at s = t
    std::vector<double> pts;
    const double scale = std::abs(w) > 0.0 ? std::min(t, 1.0 / std::abs(w)) : t;
    for (double p : geometric_points(0.0, 0.5 * t, scale)) pts.push_back(p);
    const auto tail = geometric_points(0.0, 0.5 * t, std::min(0.5 * t, 1e-6 * t));
    for (auto it = tail.rbegin() + 1; it != tail.rend(); ++it) pts.push_back(t - *it);
    const double bound = t * std::max(1.0, std::abs(ft));
    QuadratureOptions opt{options_.rel_tol, options_.abs_tol * bound, options_.max_nodes};
    return integrate_adaptive(integrand, pts, opt).value;
}

}  // namespace infil
