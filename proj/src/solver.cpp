#include "infil/solver.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "infil/special.hpp"

namespace infil {

const char* to_string(Route route) {
    switch (route) {
        case Route::Auto: return "auto";
        case Route::Straddle: return "straddle";
        case Route::PoleBypass: return "pole-bypass";
    }
    return "?";
}

const char* to_string(Representation rep) {
    switch (rep) {
        case Representation::Auto: return "auto";
        case Representation::Upper: return "upper";
        case Representation::Lower: return "lower";
    }
    return "?";
}

const char* to_string(ValueKind kind) {
    switch (kind) {
        case ValueKind::WaterContent: return "water_content";
        case ValueKind::PressureHead: return "pressure_head";
        case ValueKind::TransformedHead: return "transformed_head";
    }
    return "?";
}

SolutionGrid::SolutionGrid(Eigen::VectorXd x, Eigen::VectorXd t, std::string tag, ValueKind value_kind)
    : xs(std::move(x)), ts(std::move(t)), scenario(std::move(tag)), kind(value_kind) {
    values = Eigen::MatrixXd::Zero(xs.size(), ts.size());
    diagnostics.resize(static_cast<std::size_t>(xs.size() * ts.size()));
}

void SolutionGrid::validate() const {
    if (values.rows() != xs.size() || values.cols() != ts.size()) {
        throw Error(ErrorCode::GridMismatch, "value matrix does not match the grid");
    }
    if (!values.allFinite()) throw Error(ErrorCode::NonConvergent, "grid holds non-finite values");
}

PointDiagnostics SolutionGrid::summary() const {
    PointDiagnostics s;
    s.route = diagnostics.empty() ? "" : diagnostics.front().route;
    for (const auto& d : diagnostics) {
        s.nodes = std::max(s.nodes, d.nodes);
        s.error = std::max(s.error, d.error);
        s.tail = std::max(s.tail, d.tail);
        s.radius = std::max(s.radius, d.radius);
        s.extensions = std::max(s.extensions, d.extensions);
        if (d.route != s.route && d.route != "data") s.route = d.route;
    }
    return s;
}

namespace {

enum class PathKind { Straddle, PoleBypass, Enclose };

struct Path {
    PathKind kind;
    Complex vertex;
    double radius;  // arc radius (bypass and enclose)
    bool lower;
    const char* name;
};

Path choose_path(double c, double d0, double length, double t, Route route, bool lower,
                 const ContourConfig& cfg) {
    const double a = std::abs(c);
    double kappa = 1.0 / std::sqrt(d0 * t);
    if (std::isfinite(length)) kappa = std::min(kappa, kPi / length);
    if (a < 0.05 * kappa) {
        return {PathKind::Enclose, 0.0, 0.25 * kappa, lower, "enclose"};
    }
    if (route == Route::PoleBypass) {
        const double s = std::sin(cfg.ray_angle);
        const double growth = d0 * c * c * t * s * s / std::cos(2.0 * cfg.ray_angle);
        if (growth <= 40.0) {
            return {PathKind::PoleBypass, Complex(0.0, lower ? -a : a), 0.25 * std::min(a, kappa), lower,
                    "pole-bypass"};
        }
    }
    return {PathKind::Straddle, Complex(0.0, lower ? -0.5 * a : 0.0), 0.0, lower, "straddle"};
}

// Number of pole residues the steady term picks up (both poles when enclosed).
int multiplicity(const Path& p) { return p.kind == PathKind::Enclose ? 2 : 1; }

ContourResult integrate_path(const ComplexFn& phi, const Path& p, const ContourConfig& cfg,
                             double decay_scale, double exp_rate, double inner_scale) {
    if (p.kind == PathKind::Straddle) {
        RayOptions opt;
        opt.vertex = p.vertex;
        opt.exp_rate = exp_rate;
        opt.inner_scale = inner_scale;
        return p.lower ? integrate_lower_rays(phi, cfg, decay_scale, opt)
                       : integrate_upper_rays(phi, cfg, decay_scale, opt);
    }
    BypassOptions opt;
    opt.vertex = p.vertex;
    opt.lower = p.lower;
    opt.decay_scale = decay_scale;
    opt.exp_rate = exp_rate;
    opt.inner_scale = p.radius;
    return bypass_origin(phi, cfg, p.radius, opt);
}

void record(PointDiagnostics& d, const ContourResult& r) {
    d.nodes += r.nodes;
    d.error += r.error;
    d.tail += r.tail;
    d.radius = std::max(d.radius, r.radius);
    d.extensions += r.extensions;
}

// R_a(mu) = sin(a mu)/sin(L mu) split as mantissa * e^{exponent}
struct Ratio {
    Complex exponent;
    Complex mantissa;
};

Ratio sin_ratio_split(double a, double length, Complex mu) {
    if (std::abs(mu) * length < 1e-12) return {0.0, a / length};
    const double sign = mu.imag() >= 0.0 ? 1.0 : -1.0;
    const Complex j{0.0, 2.0 * sign};
    return {Complex(0.0, sign) * (length - a) * mu,
            special::expm1(j * a * mu) / special::expm1(j * length * mu)};
}

// sin(b mu) as mantissa * e^{exponent}
Scaled<double> sin_split(double b, Complex mu) {
    const double sign = mu.imag() >= 0.0 ? 1.0 : -1.0;
    // sin(z) = e^{-i sign z} (e^{2 i sign z} - 1) / (2 i sign)
    const Complex z = b * mu;
    const Complex e = Complex(0.0, -sign) * z;
    return {special::expm1(Complex(0.0, 2.0 * sign) * z) / Complex(0.0, 2.0 * sign) *
                std::exp(Complex(0.0, e.imag())),
            e.real()};
}

// e^{(c-a)x} sinh(a(L-x))/sinh(aL): steady response to unit data at x = 0.
double steady_left(double c, double x, double length) {
    const double a = std::abs(c);
    if (a * length < 1e-12) return (length - x) / length;
    return std::exp((c - a) * x) * std::expm1(-2.0 * a * (length - x)) / std::expm1(-2.0 * a * length);
}

// e^{-(c+a)(L-x)} sinh(ax)/sinh(aL): steady response to unit data at x = L.
double steady_right(double c, double x, double length) {
    const double a = std::abs(c);
    if (a * length < 1e-12) return x / length;
    return std::exp(-(c + a) * (length - x)) * std::expm1(-2.0 * a * x) / std::expm1(-2.0 * a * length);
}

double initial_at_infinity(const InitialData& data) {
    if (const auto* c = std::get_if<initial::Constant>(&data)) return c->value;
    if (const auto* tab = std::get_if<initial::Tabulated>(&data)) return tab->samples.value.back();
    return 0.0;
}

template <typename PointFn>
void fill_grid(SolutionGrid& grid, const SolverOptions& options, PointFn&& point) {
    const std::size_t nt = static_cast<std::size_t>(grid.ts.size());
    const std::size_t total = static_cast<std::size_t>(grid.xs.size()) * nt;
    auto evaluate_one = [&](std::size_t k) {
        const std::size_t i = k / nt;
        const std::size_t j = k % nt;
        const double x = grid.xs[static_cast<Eigen::Index>(i)];
        const double t = grid.ts[static_cast<Eigen::Index>(j)];
        try {
            PointValue pv = point(x, t);
            grid.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = pv.value;
            grid.diagnostics[k] = std::move(pv.diag);
        } catch (const Error& e) {
            std::ostringstream msg;
            msg << e.what() << " [at x = " << x << ", t = " << t << "]";
            throw Error(e.code(), msg.str());
        }
    };

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    if (options.sequential || threads <= 1 || total < 2) {
        for (std::size_t k = 0; k < total; ++k) evaluate_one(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < std::min<std::size_t>(threads, total); ++w) {
                pool.emplace_back([&] {
                    for (std::size_t k = next++; k < total; k = next++) {
                        try {
                            evaluate_one(k);
                        } catch (...) {
                            std::lock_guard lock(failure_mutex);
                            if (!failure) failure = std::current_exception();
                            next = total;
                        }
                    }
                });
            }
        }
        if (failure) std::rethrow_exception(failure);
    }
    grid.validate();
}

void check_grid(const Eigen::VectorXd& xs, const Eigen::VectorXd& ts, double length) {
    for (Eigen::Index i = 0; i < xs.size(); ++i) {
        if (!(xs[i] >= 0.0 && xs[i] <= length)) {
            throw Error(ErrorCode::InvalidArgument, "grid position outside [0, L]");
        }
    }
    for (Eigen::Index j = 0; j < ts.size(); ++j) {
        if (!(ts[j] >= 0.0) || !std::isfinite(ts[j])) {
            throw Error(ErrorCode::InvalidArgument, "grid time must be finite and >= 0");
        }
    }
}

PointValue data_value(double v) {
    PointValue pv{v, {}};
    pv.diag.route = "data";
    return pv;
}

// Unit response to constant surface data switched on at t = 0 (zero initial and
// bottom data), in the flooding form:
//   -(2 d0/pi) [m e^{-c(L-x)} I1 + J2],
//   J2 = -e^{-c(L-x)} int e^{-omega t} mu sin((L-x) mu) / (omega Delta) dlambda.
PointValue unit_surface_response(const Spectral& sp, double x, double t, const Path& path,
                                 const ContourConfig& cfg) {
    const double d0 = sp.coeffs().d0;
    const double c = sp.c();
    const double length = sp.length();
    const ComplexFn phi = [&](Complex mu) {
        const Complex w = sp.omega_mu(mu);
        const Scaled<double> s = sin_split(length - x, mu);
        const Scaled<double> delta = sp.delta_scaled(sp.lambda_of_mu(mu));
        const Complex expo = -c * (length - x) - w * t + s.exponent - delta.exponent;
        return -mu / w * (s.mantissa / delta.mantissa) * std::exp(expo);
    };
    const ContourResult j2 = integrate_path(phi, path, cfg, d0 * t, 0.0, std::abs(c));
    const double m = multiplicity(path);
    PointValue pv;
    pv.value = -(2.0 * d0 / kPi) * (m * i1_closed_scaled(x, sp.coeffs(), length) + j2.value.real());
    record(pv.diag, j2);
    pv.diag.route = path.name;
    return pv;
}

// Unit response to constant bottom data (zero initial and surface data):
//   m S_right + (2 d0/pi) int e^{-c(2L-x)} mu sin(x mu) e^{-omega t} / (Delta omega) dlambda.
PointValue unit_bottom_response(const Spectral& sp, double x, double t, const Path& path,
                                const ContourConfig& cfg) {
    const double d0 = sp.coeffs().d0;
    const double c = sp.c();
    const double length = sp.length();
    const ComplexFn phi = [&](Complex mu) {
        const Complex w = sp.omega_mu(mu);
        const Scaled<double> s = sin_split(x, mu);
        const Scaled<double> delta = sp.delta_scaled(sp.lambda_of_mu(mu));
        const Complex expo = -c * (2.0 * length - x) - w * t + s.exponent - delta.exponent;
        return mu / w * (s.mantissa / delta.mantissa) * std::exp(expo);
    };
    const ContourResult r = integrate_path(phi, path, cfg, d0 * t, 0.0, std::abs(c));
    PointValue pv;
    pv.value = multiplicity(path) * steady_right(c, x, length) + (2.0 * d0 / kPi) * r.value.real();
    record(pv.diag, r);
    pv.diag.route = path.name;
    return pv;
}

// Contribution of the non-constant part of boundary data:
//   int -(i d0/pi) mu [e^{cx} R_{L-x} Rf(omega) + e^{-c(L-x)} R_x Rg(omega)] dmu
ContourResult boundary_remainder(const Spectral& sp, const TimeTransform* left, const TimeTransform* right,
                                 double x, double t, const Path& path, const ContourConfig& cfg,
                                 bool mirrored) {
    const double d0 = sp.coeffs().d0;
    const double c = sp.c();
    const double length = sp.length();
    const ComplexFn upper = [=, &sp](Complex mu) {
        const Complex w = sp.omega_mu(mu);
        Complex sum{};
        if (left) {
            const Ratio r = sin_ratio_split(length - x, length, mu);
            sum += std::exp(c * x + r.exponent) * r.mantissa * left->remainder(w, t);
        }
        if (right) {
            const Ratio r = sin_ratio_split(x, length, mu);
            sum += std::exp(-c * (length - x) + r.exponent) * r.mantissa * right->remainder(w, t);
        }
        return Complex(0.0, -d0 / kPi) * mu * sum;
    };
    const ComplexFn phi = mirrored ? ComplexFn([&upper](Complex mu) { return -upper(-mu); }) : upper;
    double span = length;
    if (left) span = std::min(span, x);
    if (right) span = std::min(span, length - x);
    const double rate = span * std::sin(cfg.ray_angle);
    return integrate_path(phi, path, cfg, 0.0, rate, std::abs(c));
}

}  // namespace

double minimum_time(double d0, double length, const ContourConfig& cfg) {
    // keep the number of oscillations of e^{i lambda x} over the real-line window
    // within the node budget (about 60 nodes per period)
    const double lambda_max = static_cast<double>(cfg.max_nodes) * kPi / (60.0 * length);
    return cfg.truncation_safety * cfg.truncation_safety * std::log(1.0 / cfg.abs_tol) /
           (d0 * lambda_max * lambda_max);
}

double i1_closed(double x, const Coefficients& coeffs, double length) {
    return i1_closed_scaled(x, coeffs, length) * std::exp(coeffs.shift() * (length - x));
}

double i1_closed_scaled(double x, const Coefficients& coeffs, double length) {
    return -(kPi / (2.0 * coeffs.d0)) * steady_left(coeffs.shift(), x, length);
}

PointValue general_point(const ProfileProblem& problem, double x, double t, const SolverOptions& options) {
    const double length = problem.length;
    if (t == 0.0) return data_value(evaluate(problem.initial, x));
    if (x == 0.0) return data_value(evaluate(problem.left, t));
    if (x == length) return data_value(evaluate(problem.right, t));
    const ContourConfig& cfg = options.contour;
    const Spectral sp = problem.spectral();
    const double d0 = problem.coeffs.d0;
    const bool has_initial = !std::holds_alternative<initial::Zero>(problem.initial);
    if (has_initial && t < minimum_time(d0, length, cfg)) return data_value(evaluate(problem.initial, x));

    const double c = sp.c();
    const bool lower = options.representation == Representation::Lower;
    const Route route = options.route == Route::Auto ? Route::Straddle : options.route;
    const Path path = choose_path(c, d0, length, t, route, lower, cfg);
    const double ft = evaluate(problem.left, t);
    const double gt = evaluate(problem.right, t);

    PointValue pv;
    pv.diag.route = path.name;
    double value = 0.0;

    if (has_initial) {
        const ComplexFn t1 = [&](Complex lambda) {
            return std::exp(kI * lambda * x - sp.omega(lambda) * t) * hat_theta0(problem, lambda);
        };
        const ContourResult r = integrate_real_line(t1, cfg, d0 * t);
        value += r.value.real() / (2.0 * kPi);
        record(pv.diag, r);
    }

    // initial-data terms and transient parts of the boundary terms, upper form
    const ComplexFn upper = [&](Complex mu) {
        const Complex lambda = sp.lambda_of_mu(mu);
        const Complex w = sp.omega_mu(mu);
        const Ratio rx = sin_ratio_split(x, length, mu);
        const Ratio rlx = sin_ratio_split(length - x, length, mu);
        const Complex left_factor = std::exp(c * x + rlx.exponent - w * t) * rlx.mantissa;
        const Complex right_factor = std::exp(-c * (length - x) + rx.exponent - w * t) * rx.mantissa;
        Complex sum{};
        if (has_initial) {
            sum -= (right_factor * hat_theta0_anchored(problem.initial, length, lambda) +
                    left_factor * hat_theta0(problem.initial, length, sp.nu(lambda))) /
                   (2.0 * kPi);
        }
        // -(i d0/pi) mu R (-f e^{-omega t}/omega)
        sum += Complex(0.0, d0 / kPi) * mu / w * (ft * left_factor + gt * right_factor);
        return sum;
    };
    const ComplexFn lower_form = [&upper](Complex mu) { return -upper(-mu); };
    if (has_initial || ft != 0.0 || gt != 0.0) {
        const ContourResult r =
            integrate_path(lower ? lower_form : upper, path, cfg, d0 * t, 0.0, std::abs(c));
        value += r.value.real();
        record(pv.diag, r);
    }

    const TimeTransform left_tt(problem.left);
    const TimeTransform right_tt(problem.right);
    const TimeTransform* lp = left_tt.is_constant() ? nullptr : &left_tt;
    const TimeTransform* rp = right_tt.is_constant() ? nullptr : &right_tt;
    if (lp || rp) {
        const ContourResult r = boundary_remainder(sp, lp, rp, x, t, path, cfg, lower);
        value += r.value.real();
        record(pv.diag, r);
    }

    const double m = multiplicity(path);
    value += m * (ft * steady_left(c, x, length) + gt * steady_right(c, x, length));
    pv.value = value;
    return pv;
}

SolutionGrid solve_general(const ProfileProblem& problem, const Eigen::VectorXd& xs,
                           const Eigen::VectorXd& ts, const SolverOptions& options) {
    problem.validate();
    options.contour.validate();
    check_grid(xs, ts, problem.length);
    SolutionGrid grid(xs, ts, "general", ValueKind::WaterContent);
    fill_grid(grid, options, [&](double x, double t) { return general_point(problem, x, t, options); });
    return grid;
}

SolutionGrid solve_flooding(double theta0, double theta1, const Coefficients& coeffs, double length,
                            const Eigen::VectorXd& xs, const Eigen::VectorXd& ts,
                            const SolverOptions& options) {
    if (!(theta1 > theta0)) throw Error(ErrorCode::InvalidArgument, "flooding needs theta1 > theta0");
    options.contour.validate();
    const Spectral sp(coeffs, length);
    check_grid(xs, ts, length);
    const Route route = options.route == Route::Auto ? Route::PoleBypass : options.route;
    const bool lower = options.representation == Representation::Lower;
    SolutionGrid grid(xs, ts, "flooding", ValueKind::WaterContent);
    fill_grid(grid, options, [&](double x, double t) {
        if (t == 0.0) return data_value(theta0);
        if (x == 0.0) return data_value(theta1);
        if (x == length) return data_value(theta0);
        const Path path = choose_path(sp.c(), coeffs.d0, length, t, route, lower, options.contour);
        PointValue pv = unit_surface_response(sp, x, t, path, options.contour);
        pv.value = theta0 + (theta1 - theta0) * pv.value;
        return pv;
    });
    return grid;
}

SolutionGrid solve_rainfall_flux(double theta0, const BoundaryData& surface, const Coefficients& coeffs,
                                 double length, const Eigen::VectorXd& xs, const Eigen::VectorXd& ts,
                                 const SolverOptions& options) {
    if (!std::holds_alternative<boundary::BraesterFlux>(surface) &&
        !std::holds_alternative<boundary::Tabulated>(surface)) {
        throw Error(ErrorCode::InvalidArgument, "rainfall surface data must be BraesterFlux or Tabulated");
    }
    ProfileProblem check{length, coeffs, initial::Constant{theta0}, surface, boundary::Constant{theta0}};
    check.validate();
    options.contour.validate();
    check_grid(xs, ts, length);
    const Spectral sp(coeffs, length);
    const Route route = options.route == Route::Auto ? Route::PoleBypass : options.route;
    const bool lower = options.representation == Representation::Lower;
    const TimeTransform tt(surface);
    SolutionGrid grid(xs, ts, "rainfall_flux", ValueKind::WaterContent);
    fill_grid(grid, options, [&](double x, double t) {
        if (t == 0.0) return data_value(theta0);
        if (x == 0.0) return data_value(evaluate(surface, t));
        if (x == length) return data_value(theta0);
        const Path path = choose_path(sp.c(), coeffs.d0, length, t, route, lower, options.contour);
        // u = (f(t) - theta0) U + remainder term of f
        PointValue pv = unit_surface_response(sp, x, t, path, options.contour);
        const ContourResult r = boundary_remainder(sp, &tt, nullptr, x, t, path, options.contour, false);
        pv.value = theta0 + (evaluate(surface, t) - theta0) * pv.value + r.value.real();
        record(pv.diag, r);
        return pv;
    });
    return grid;
}

void TankParameters::validate() const {
    if (!(a > 0.0) || !(ks > 0.0) || !(theta1 > theta0) || !(h0 < 0.0) || !(length > 0.0)) {
        throw Error(ErrorCode::InvalidArgument,
                    "tank parameters need a > 0, ks > 0, theta1 > theta0, h0 < 0, L > 0");
    }
    const double e = eps();
    if (!(e > 0.0 && e < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "e^{a h0} must lie in (0, 1)");
    }
}

SolutionGrid solve_tank_transformed(const TankParameters& params, const Eigen::VectorXd& xs,
                                    const Eigen::VectorXd& ts, const SolverOptions& options) {
    params.validate();
    options.contour.validate();
    const double length = params.length;
    check_grid(xs, ts, length);
    const Coefficients coeffs = params.coeffs();
    const Spectral sp(coeffs, length);
    const Route route = options.route == Route::Auto ? Route::PoleBypass : options.route;
    const bool lower = options.representation != Representation::Upper;
    const double g = 1.0 - params.eps();
    SolutionGrid grid(xs, ts, "pressure_tank", ValueKind::TransformedHead);
    fill_grid(grid, options, [&](double x, double t) {
        if (x == length && t > 0.0) return data_value(g);
        if (t == 0.0 || x == 0.0) return data_value(0.0);
        const Path path = choose_path(sp.c(), coeffs.d0, length, t, route, lower, options.contour);
        PointValue pv = unit_bottom_response(sp, x, t, path, options.contour);
        pv.value *= g;
        return pv;
    });
    return grid;
}

double head_from_transformed(double h_ae, const TankParameters& params) {
    const double arg = h_ae + params.eps();
    if (!(arg > 0.0)) {
        std::ostringstream msg;
        msg << "h_{a,eps} + eps = " << arg << " is not positive";
        throw Error(ErrorCode::LogDomain, msg.str());
    }
    return std::log(arg) / params.a;
}

SolutionGrid solve_pressure_tank(const TankParameters& params, const Eigen::VectorXd& xs,
                                 const Eigen::VectorXd& ts, const SolverOptions& options) {
    SolutionGrid grid = solve_tank_transformed(params, xs, ts, options);
    for (Eigen::Index i = 0; i < grid.values.rows(); ++i) {
        for (Eigen::Index j = 0; j < grid.values.cols(); ++j) {
            grid.values(i, j) = head_from_transformed(grid.values(i, j), params);
        }
    }
    grid.kind = ValueKind::PressureHead;
    return grid;
}

SolutionGrid solve_half_line(const InitialData& initial_data, const BoundaryData& surface,
                             const Coefficients& coeffs, const Eigen::VectorXd& xs,
                             const Eigen::VectorXd& ts, const SolverOptions& options) {
    options.contour.validate();
    const double theta_inf = initial_at_infinity(initial_data);
    const InitialData u0 = std::holds_alternative<initial::Tabulated>(initial_data)
                               ? shifted(initial_data, theta_inf)
                               : InitialData(initial::Zero{});
    double support = 0.0;
    if (const auto* tab = std::get_if<initial::Tabulated>(&u0)) {
        tab->samples.validate("initial");
        if (tab->samples.at.front() != 0.0) {
            throw Error(ErrorCode::InvalidArgument, "initial: tabulated samples must start at x = 0");
        }
        support = tab->samples.at.back();
    }
    ProfileProblem check{1.0, coeffs, initial::Zero{}, surface, boundary::Zero{}};
    check.validate();
    for (Eigen::Index i = 0; i < xs.size(); ++i) {
        if (!(xs[i] >= 0.0) || !std::isfinite(xs[i])) {
            throw Error(ErrorCode::InvalidArgument, "half-line positions must be finite and >= 0");
        }
    }
    check_grid(Eigen::VectorXd(), ts, 1.0);

    const BoundaryData fu = shifted(surface, theta_inf);
    const TimeTransform tt(fu);
    const bool has_initial = !std::holds_alternative<initial::Zero>(u0);
    const Spectral sp(coeffs, 1.0);
    const double d0 = coeffs.d0;
    const double c = sp.c();
    const double a = std::abs(c);
    const Route route = options.route == Route::Auto ? Route::Straddle : options.route;
    const ContourConfig& cfg = options.contour;

    SolutionGrid grid(xs, ts, "half_line", ValueKind::WaterContent);
    fill_grid(grid, options, [&](double x, double t) {
        if (t == 0.0) return data_value(evaluate(initial_data, x));
        if (x == 0.0) return data_value(evaluate(surface, t));
        // x plays the part of L: keeps the arc small enough for e^{i lambda x} to resolve on it
        const Path path = choose_path(c, d0, x, t, route, false, cfg);
        const double ft = evaluate(fu, t);
        PointValue pv;
        pv.diag.route = path.name;
        double value = theta_inf;
        if (has_initial) {
            const ComplexFn t1 = [&](Complex lambda) {
                return std::exp(kI * lambda * x - sp.omega(lambda) * t) * hat_theta0(u0, support, lambda);
            };
            const ContourResult r = integrate_real_line(t1, cfg, d0 * t);
            value += r.value.real() / (2.0 * kPi);
            record(pv.diag, r);
        }
        const ComplexFn phi = [&](Complex mu) {
            const Complex lambda = sp.lambda_of_mu(mu);
            const Complex w = sp.omega_mu(mu);
            const Complex e = std::exp(kI * lambda * x - w * t);
            Complex sum = Complex(0.0, d0 / kPi) * mu / w * ft * e;
            if (has_initial) sum -= e * hat_theta0(u0, support, sp.nu(lambda)) / (2.0 * kPi);
            return sum;
        };
        if (has_initial || ft != 0.0) {
            const ContourResult r = integrate_path(phi, path, cfg, d0 * t, 0.0, a);
            value += r.value.real();
            record(pv.diag, r);
        }
        if (!tt.is_constant()) {
            const ComplexFn rem = [&](Complex mu) {
                const Complex lambda = sp.lambda_of_mu(mu);
                return Complex(0.0, -d0 / kPi) * mu * std::exp(kI * lambda * x) *
                       tt.remainder(sp.omega_mu(mu), t);
            };
            const ContourResult r =
                integrate_path(rem, path, cfg, 0.0, x * std::sin(cfg.ray_angle), a);
            value += r.value.real();
            record(pv.diag, r);
        }
        // residues of f/omega at the poles the contour passes below
        double steady = std::exp((c - a) * x);
        if (path.kind == PathKind::Enclose) steady += std::exp((c + a) * x);
        value += ft * steady;
        pv.value = value;
        return pv;
    });
    return grid;
}

}  // namespace infil
