#include "infil/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

namespace infil {

namespace {

// Kronrod abscissae (positive half, descending) and weights; odd-index nodes are Gauss points.
constexpr std::array<double, 8> kXk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    Complex value;
    double error;

    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gk15(const RealToComplex& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const Complex fc = f(mid);
    Complex kron = kWk[7] * fc;
    Complex gauss = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXk[j];
        const Complex sum = f(mid - dx) + f(mid + dx);
        kron += kWk[j] * sum;
        if (j % 2 == 1) gauss += kWg[j / 2] * sum;
    }
    kron *= half;
    gauss *= half;
    double err = std::abs(kron - gauss);
    if (!std::isfinite(kron.real()) || !std::isfinite(kron.imag())) {
        throw Error(ErrorCode::NonConvergent, "integrand is not finite on the panel");
    }
    return {a, b, kron, err};
}

}  // namespace

QuadratureResult integrate_adaptive(const RealToComplex& f, std::span<const double> points,
                                    const QuadratureOptions& options) {
    if (points.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "integration needs at least two points");
    }
    std::priority_queue<Panel> queue;
    Complex total{};
    double error = 0.0;
    std::size_t nodes = 0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (!(points[i + 1] > points[i])) continue;
        Panel p = gk15(f, points[i], points[i + 1]);
        nodes += 15;
        total += p.value;
        error += p.error;
        queue.push(p);
    }
    if (queue.empty()) return {};

    while (error > std::max(options.abs_tol, options.rel_tol * std::abs(total))) {
        if (nodes + 30 > options.max_nodes) {
            std::ostringstream msg;
            msg << "node budget " << options.max_nodes << " exhausted (error estimate " << error
                << ", value magnitude " << std::abs(total) << ")";
            throw Error(ErrorCode::NonConvergent, msg.str());
        }
        Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // panel at roundoff width; accept it as is
            error -= worst.error;
            worst.error = 0.0;
            queue.push(worst);
            continue;
        }
        const Panel left = gk15(f, worst.a, mid);
        const Panel right = gk15(f, mid, worst.b);
        nodes += 30;
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
    }

    // re-sum to shed the drift of the incremental updates
    Complex sum{};
    double err = 0.0;
    while (!queue.empty()) {
        sum += queue.top().value;
        err += queue.top().error;
        queue.pop();
    }
    return {sum, err, nodes};
}

QuadratureResult integrate_adaptive(const RealToComplex& f, double a, double b,
                                    const QuadratureOptions& options) {
    const std::array<double, 2> pts{a, b};
    return integrate_adaptive(f, pts, options);
}

std::vector<double> geometric_points(double a, double b, double h) {
    std::vector<double> pts{a};
    if (h > 0.0) {
        for (double step = h; a + step < b; step *= 2.0) pts.push_back(a + step);
    }
    pts.push_back(b);
    return pts;
}

}  // namespace infil
