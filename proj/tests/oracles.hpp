#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the solver code paths it is used to check.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

/// Gauss-Legendre nodes and weights on [-1, 1] by Golub-Welsch.
struct GaussLegendre {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;

    explicit GaussLegendre(int n) {
        Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
        for (int k = 1; k < n; ++k) {
            const double b = k / std::sqrt(4.0 * k * k - 1.0);
            j(k, k - 1) = b;
            j(k - 1, k) = b;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
        nodes = es.eigenvalues();
        weights = 2.0 * es.eigenvectors().row(0).transpose().array().square();
    }
};

inline const GaussLegendre& gl20() {
    static const GaussLegendre rule(20);
    return rule;
}

/// Composite 20-point Gauss-Legendre over [a, b] split into `panels` pieces.
template <class T>
T integrate(const std::function<T(double)>& f, double a, double b, int panels) {
    const auto& g = gl20();
    T sum{};
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        for (Eigen::Index k = 0; k < g.nodes.size(); ++k) {
            sum += g.weights[k] * 0.5 * h * f(mid + 0.5 * h * g.nodes[k]);
        }
    }
    return sum;
}

/// Composite rule over [a, b] with panel edges a + h * 2^k (k = 0, 1, ...), for
/// integrands that vary on scale h near a and decay slowly further out.
inline Complex integrate_geometric(const std::function<Complex(double)>& f, double a, double b, double h,
                                   int panels_per_piece = 2) {
    Complex sum = integrate<Complex>(f, a, std::min(b, a + h), panels_per_piece);
    for (double lo = a + h; lo < b; lo = a + 2.0 * (lo - a)) {
        sum += integrate<Complex>(f, lo, std::min(b, a + 2.0 * (lo - a)), panels_per_piece);
    }
    return sum;
}

/// Eigenfunction series for u_t + k u_x = d u_xx on (0, L), u(0, t) = f,
/// u(L, t) = g (constants) and initial data u0. The steady part
/// A + B e^{2 c x} is exact; the transient is e^{c x - d c^2 t} sum b_n sin(n pi x / L) e^{-d (n pi / L)^2 t}.
class SineSeries {
public:
    /// `breaks` are the kinks of u0 (quadrature panels end there); a finite
    /// u0_constant selects closed-form coefficients.
    SineSeries(double d, double k, double length, double f, double g, std::function<double(double)> u0,
               double u0_constant = NAN, std::vector<double> breaks = {})
        : d_(d), c_(k / (2.0 * d)), length_(length) {
        const double e = std::expm1(2.0 * c_ * length);
        if (std::abs(c_) * length < 1e-12) {
            a_ = f;
            b_ = 0.0;
            slope_ = (g - f) / length;
        } else {
            b_ = (g - f) / e;
            a_ = f - b_;
            slope_ = 0.0;
        }
        closed_ = !std::isnan(u0_constant) && slope_ == 0.0;
        u0_constant_ = u0_constant;
        if (closed_) return;
        // b_n = (2/L) int_0^L e^{-c x} (u0 - steady) sin(beta x) dx by quadrature
        for (int n = 1; n <= kQuadratureTerms; ++n) {
            const double beta = n * std::numbers::pi / length;
            const auto integrand = [&](double x) {
                return std::exp(-c_ * x) * (u0(x) - steady(x)) * std::sin(beta * x);
            };
            std::vector<double> edges{0.0};
            for (double b : breaks) {
                if (b > 0.0 && b < length) edges.push_back(b);
            }
            edges.push_back(length);
            double bn = 0.0;
            for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
                const double w = edges[e + 1] - edges[e];
                const int panels = 2 + static_cast<int>(n * w / length);
                bn += (2.0 / length) * integrate<double>(integrand, edges[e], edges[e + 1], panels);
            }
            coef_.push_back(bn);
        }
    }

    double steady(double x) const { return a_ + b_ * std::exp(2.0 * c_ * x) + slope_ * x; }

    double operator()(double x, double t) const {
        double sum = 0.0;
        const int terms = closed_ ? kClosedTerms : kQuadratureTerms;
        for (int n = 1; n <= terms; ++n) {
            const double beta = n * std::numbers::pi / length_;
            const double decay = std::exp(-d_ * beta * beta * t);
            if (decay < 1e-300) break;
            const double bn = closed_ ? (2.0 / length_) * ((u0_constant_ - a_) * exp_sin(-c_, beta) - b_ * exp_sin(c_, beta))
                                      : coef_[n - 1];
            sum += bn * std::sin(beta * x) * decay;
        }
        return steady(x) + std::exp(c_ * x - d_ * c_ * c_ * t) * sum;
    }

private:
    static constexpr int kQuadratureTerms = 4000;
    static constexpr int kClosedTerms = 10000000;

    // int_0^L e^{alpha x} sin(beta x) dx with beta = n pi / L
    double exp_sin(double alpha, double beta) const {
        const double sign = std::cos(beta * length_);
        return beta * (1.0 - sign * std::exp(alpha * length_)) / (alpha * alpha + beta * beta);
    }

    double d_;
    double c_;
    double length_;
    double a_ = 0.0;
    double b_ = 0.0;
    double slope_ = 0.0;
    bool closed_ = false;
    double u0_constant_ = 0.0;
    std::vector<double> coef_;
};

/// Step response on the half-line: u(0, t) = 1, u(x, 0) = 0, speed k.
inline double step_half_line(double x, double t, double d, double k) {
    const double s = 2.0 * std::sqrt(d * t);
    const double first = 0.5 * std::erfc((x - k * t) / s);
    const double z = (x + k * t) / s;
    // e^{k x / d} erfc(z) = e^{k x / d - z^2} erfcx(z); use the direct form while it is safe
    const double second = z < 20.0 ? 0.5 * std::exp(k * x / d) * std::erfc(z)
                                   : 0.5 * std::exp(k * x / d - z * z) / (z * std::sqrt(std::numbers::pi));
    return first + second;
}

}  // namespace oracle
