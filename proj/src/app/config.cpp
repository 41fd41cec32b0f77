#include "infil/app/config.hpp"

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "infil/core.hpp"

namespace infil::app {

namespace {

using units::Dimension;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
    throw Error(ErrorCode::ConfigError, field + ": " + why);
}

std::string number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string with_unit(double v, Dimension dim) {
    const std::string sym = units::base_symbol(dim);
    return sym.empty() ? number(v) : number(v) + " " + sym;
}

std::string scalar_text(const YAML::Node& node, const std::string& field) {
    if (!node.IsScalar()) fail(field, "expected a single value");
    return node.as<std::string>();
}

void check_keys(const YAML::Node& map, const std::string& where, const std::set<std::string>& allowed) {
    for (const auto& kv : map) {
        const std::string key = kv.first.as<std::string>();
        if (!allowed.count(key)) fail(where.empty() ? key : where + "." + key, "unknown field");
    }
}

YAML::Node require_map(const YAML::Node& node, const std::string& field) {
    if (!node) fail(field, "missing required section '" + field + "'");
    if (!node.IsMap()) fail(field, "expected a mapping");
    return node;
}

double quantity(const YAML::Node& node, const std::string& field, Dimension dim) {
    return units::parse_as(scalar_text(node, field), dim, field);
}

double plain_number(const YAML::Node& node, const std::string& field) {
    return quantity(node, field, units::kDimensionless);
}

std::size_t count_value(const YAML::Node& node, const std::string& field) {
    const double v = plain_number(node, field);
    if (!(v >= 0.0) || v != std::floor(v) || v > 1e15) fail(field, "expected a non-negative integer");
    return static_cast<std::size_t>(v);
}

std::vector<double> quantity_list(const YAML::Node& node, const std::string& field, Dimension dim) {
    if (!node.IsSequence() || node.size() == 0) fail(field, "expected a non-empty list");
    std::vector<double> out;
    for (std::size_t i = 0; i < node.size(); ++i) {
        out.push_back(quantity(node[i], field + "[" + std::to_string(i) + "]", dim));
    }
    return out;
}

// Parameter table with a log of every conversion.
class Parameters {
public:
    Parameters(const YAML::Node& node, std::vector<ParameterEntry>& log) : node_(node), log_(log) {}

    double get(const std::string& name, Dimension dim) const {
        const YAML::Node v = node_[name];
        if (!v) fail("parameters." + name, "missing required field '" + name + "'");
        return take(name, v, dim);
    }

    double get_or(const std::string& name, Dimension dim, double fallback) const {
        const YAML::Node v = node_[name];
        return v ? take(name, v, dim) : fallback;
    }

    YAML::Node node(const std::string& name) const {
        const YAML::Node v = node_[name];
        if (!v) fail("parameters." + name, "missing required field '" + name + "'");
        return v;
    }

    double take(const std::string& name, const YAML::Node& v, Dimension dim) const {
        const std::string field = "parameters." + name;
        const std::string given = scalar_text(v, field);
        const double value = units::parse_as(given, dim, field);
        log_.push_back({name, given, value, dim});
        return value;
    }

private:
    YAML::Node node_;
    std::vector<ParameterEntry>& log_;
};

InitialData read_initial(const YAML::Node& node, const std::string& field) {
    if (node.IsScalar()) {
        if (node.as<std::string>() == "zero") return initial::Zero{};
        return initial::Constant{plain_number(node, field)};
    }
    if (!node.IsMap()) fail(field, "expected 'zero', a number or a mapping");
    check_keys(node, field, {"constant", "x", "value"});
    if (node["constant"]) return initial::Constant{plain_number(node["constant"], field + ".constant")};
    if (!node["x"] || !node["value"]) fail(field, "tabulated data need both 'x' and 'value'");
    initial::Tabulated tab{{quantity_list(node["x"], field + ".x", units::kLength),
                            quantity_list(node["value"], field + ".value", units::kDimensionless)}};
    return tab;
}

BoundaryData read_boundary(const YAML::Node& node, const std::string& field, std::vector<ParameterEntry>& log) {
    if (node.IsScalar()) {
        if (node.as<std::string>() == "zero") return boundary::Zero{};
        return boundary::Constant{plain_number(node, field)};
    }
    if (!node.IsMap()) fail(field, "expected 'zero', a number or a mapping");
    check_keys(node, field, {"constant", "rainfall", "t", "value"});
    if (node["constant"]) return boundary::Constant{plain_number(node["constant"], field + ".constant")};
    if (const YAML::Node b = node["rainfall"]) {
        if (!b.IsMap()) fail(field + ".rainfall", "expected a mapping with 'ka' and optional 'offset'");
        check_keys(b, field + ".rainfall", {"ka", "offset"});
        if (!b["ka"]) fail(field + ".rainfall.ka", "missing required field 'ka'");
        boundary::BraesterFlux flux;
        const std::string ka_text = scalar_text(b["ka"], field + ".rainfall.ka");
        flux.ka = units::parse_as(ka_text, units::kRate, field + ".rainfall.ka");
        log.push_back({field + ".ka", ka_text, flux.ka, units::kRate});
        if (b["offset"]) flux.theta_offset = plain_number(b["offset"], field + ".rainfall.offset");
        return flux;
    }
    if (!node["t"] || !node["value"]) fail(field, "tabulated data need both 't' and 'value'");
    return boundary::Tabulated{{quantity_list(node["t"], field + ".t", units::kTime),
                                quantity_list(node["value"], field + ".value", units::kDimensionless)}};
}

Eigen::VectorXd read_axis(const YAML::Node& node, const std::string& field, Dimension dim) {
    if (!node) fail(field, "missing required field '" + field + "'");
    std::vector<double> v;
    if (node.IsSequence()) {
        v = quantity_list(node, field, dim);
    } else if (node.IsMap()) {
        check_keys(node, field, {"from", "to", "count"});
        if (!node["from"] || !node["to"] || !node["count"]) fail(field, "a range needs 'from', 'to' and 'count'");
        const double a = quantity(node["from"], field + ".from", dim);
        const double b = quantity(node["to"], field + ".to", dim);
        const std::size_t n = count_value(node["count"], field + ".count");
        if (n == 0) fail(field + ".count", "must be positive");
        if (n == 1) {
            v.push_back(a);
        } else {
            const Eigen::VectorXd lin = Eigen::VectorXd::LinSpaced(static_cast<Eigen::Index>(n), a, b);
            v.assign(lin.data(), lin.data() + lin.size());
            v.back() = b;
        }
    } else {
        fail(field, "expected a list or a range {from, to, count}");
    }
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i] > v[i - 1])) fail(field, "values must be strictly increasing");
    }
    return Eigen::Map<Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

double angle_value(const YAML::Node& node, const std::string& field) {
    const std::string text = scalar_text(node, field);
    if (text.rfind("pi/", 0) == 0) {
        double den = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data() + 3, text.data() + text.size(), den);
        if (ec != std::errc() || ptr != text.data() + text.size() || !(den > 0.0)) fail(field, "bad angle");
        return kPi / den;
    }
    return plain_number(node, field);
}

Route route_from(const std::string& s) {
    if (s == "auto") return Route::Auto;
    if (s == "straddle") return Route::Straddle;
    if (s == "pole_bypass") return Route::PoleBypass;
    fail("solver.route", "expected auto, straddle or pole_bypass");
}

Representation representation_from(const std::string& s) {
    if (s == "auto") return Representation::Auto;
    if (s == "upper") return Representation::Upper;
    if (s == "lower") return Representation::Lower;
    fail("solver.representation", "expected auto, upper or lower");
}

std::string route_name(Route r) {
    switch (r) {
        case Route::Auto: return "auto";
        case Route::Straddle: return "straddle";
        case Route::PoleBypass: return "pole_bypass";
    }
    return "auto";
}

std::string representation_name(Representation r) {
    switch (r) {
        case Representation::Auto: return "auto";
        case Representation::Upper: return "upper";
        case Representation::Lower: return "lower";
    }
    return "auto";
}

// Library argument checks surface as configuration errors here.
template <class F>
void as_config_error(const std::string& field, F&& check) {
    try {
        check();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ConfigError) throw;
        fail(field, e.detail());
    }
}

void read_parameters(ScenarioConfig& cfg, const YAML::Node& node) {
    require_map(node, "parameters");
    Parameters p(node, cfg.parameters);
    using namespace units;
    switch (cfg.scenario) {
        case ScenarioKind::Flooding:
            check_keys(node, "parameters", {"length", "d0", "k0", "theta0", "theta1"});
            cfg.length = p.get("length", kLength);
            cfg.d0 = p.get("d0", kDiffusivity);
            cfg.k0 = p.get("k0", kVelocity);
            cfg.theta0 = p.get("theta0", kDimensionless);
            cfg.theta1 = p.get("theta1", kDimensionless);
            break;
        case ScenarioKind::RainfallFlux:
            check_keys(node, "parameters", {"length", "d0", "k0", "theta0", "ka", "theta_offset"});
            cfg.length = p.get("length", kLength);
            cfg.d0 = p.get("d0", kDiffusivity);
            cfg.k0 = p.get("k0", kVelocity);
            cfg.theta0 = p.get("theta0", kDimensionless);
            cfg.ka = p.get("ka", kRate);
            cfg.theta_offset = p.get_or("theta_offset", kDimensionless, 0.0);
            break;
        case ScenarioKind::PressureTank:
            check_keys(node, "parameters", {"length", "a", "ks", "theta0", "theta1", "h0"});
            cfg.length = p.get("length", kLength);
            cfg.tank.length = cfg.length;
            cfg.tank.a = p.get("a", kInverseLength);
            cfg.tank.ks = p.get("ks", kVelocity);
            cfg.tank.theta0 = p.get("theta0", kDimensionless);
            cfg.tank.theta1 = p.get("theta1", kDimensionless);
            cfg.tank.h0 = p.get("h0", kLength);
            break;
        case ScenarioKind::General:
            check_keys(node, "parameters", {"length", "d0", "k0", "initial", "left", "right"});
            cfg.length = p.get("length", kLength);
            cfg.d0 = p.get("d0", kDiffusivity);
            cfg.k0 = p.get("k0", kVelocity);
            cfg.initial = read_initial(p.node("initial"), "parameters.initial");
            cfg.left = read_boundary(p.node("left"), "parameters.left", cfg.parameters);
            cfg.right = read_boundary(p.node("right"), "parameters.right", cfg.parameters);
            break;
        case ScenarioKind::HalfLine:
            check_keys(node, "parameters", {"d0", "k0", "initial", "left"});
            cfg.d0 = p.get("d0", kDiffusivity);
            cfg.k0 = p.get("k0", kVelocity);
            cfg.initial = read_initial(p.node("initial"), "parameters.initial");
            cfg.left = read_boundary(p.node("left"), "parameters.left", cfg.parameters);
            break;
    }
}

void validate(ScenarioConfig& cfg) {
    if (cfg.scenario == ScenarioKind::PressureTank) {
        as_config_error("parameters", [&] { cfg.tank.validate(); });
    } else if (cfg.scenario == ScenarioKind::HalfLine) {
        as_config_error("parameters", [&] {
            ProfileProblem check{1.0, {cfg.d0, cfg.k0}, initial::Zero{}, cfg.left, boundary::Zero{}};
            check.validate();
            if (const auto* tab = std::get_if<initial::Tabulated>(&cfg.initial)) {
                tab->samples.validate("initial");
                if (tab->samples.at.front() != 0.0) fail("parameters.initial.x", "must start at 0");
            }
        });
    } else {
        as_config_error("parameters", [&] { cfg.profile().validate(); });
    }

    const double lo = 0.0;
    const double hi = cfg.scenario == ScenarioKind::HalfLine ? INFINITY : cfg.length;
    for (Eigen::Index i = 0; i < cfg.xs.size(); ++i) {
        if (!(cfg.xs[i] >= lo && cfg.xs[i] <= hi * (1.0 + 1e-14))) fail("grid.x", "positions must lie in [0, length]");
        cfg.xs[i] = std::min(cfg.xs[i], hi);
    }
    for (Eigen::Index j = 0; j < cfg.ts.size(); ++j) {
        if (!(cfg.ts[j] > 0.0)) fail("grid.t", "times must be positive");
    }
    if (!comparison_allowed(cfg.scenario, cfg.comparison)) {
        fail("comparison", std::string("'") + to_string(cfg.comparison) + "' is not available for scenario " +
                               to_string(cfg.scenario));
    }
    as_config_error("contour", [&] { cfg.solver.contour.validate(); });
    as_config_error("fd", [&] { cfg.fd.validate(); });
    as_config_error("series", [&] { cfg.series.validate(); });
    if (!(cfg.fd_tolerance > 0.0)) fail("fd.tolerance", "must be positive");
}

ScenarioConfig from_node(const YAML::Node& root, const std::string& source) {
    if (!root || !root.IsMap()) fail("config", "expected a mapping at the top level");
    check_keys(root, "", {"scenario", "description", "parameters", "grid", "contour", "solver", "comparison",
                          "fd", "series", "output_dir", "manifest"});
    ScenarioConfig cfg;
    cfg.source = source;
    if (!root["scenario"]) fail("scenario", "missing required field 'scenario'");
    cfg.scenario = scenario_from(scalar_text(root["scenario"], "scenario"));
    if (root["description"]) cfg.description = scalar_text(root["description"], "description");

    read_parameters(cfg, root["parameters"]);

    const YAML::Node grid = require_map(root["grid"], "grid");
    check_keys(grid, "grid", {"x", "t"});
    cfg.xs = read_axis(grid["x"], "grid.x", units::kLength);
    cfg.ts = read_axis(grid["t"], "grid.t", units::kTime);

    if (const YAML::Node c = root["contour"]) {
        require_map(c, "contour");
        check_keys(c, "contour", {"ray_angle", "rel_tol", "abs_tol", "max_nodes", "truncation_safety"});
        ContourConfig& cc = cfg.solver.contour;
        if (c["ray_angle"]) cc.ray_angle = angle_value(c["ray_angle"], "contour.ray_angle");
        if (c["rel_tol"]) cc.rel_tol = plain_number(c["rel_tol"], "contour.rel_tol");
        if (c["abs_tol"]) cc.abs_tol = plain_number(c["abs_tol"], "contour.abs_tol");
        if (c["max_nodes"]) cc.max_nodes = count_value(c["max_nodes"], "contour.max_nodes");
        if (c["truncation_safety"]) cc.truncation_safety = plain_number(c["truncation_safety"], "contour.truncation_safety");
    }
    if (const YAML::Node s = root["solver"]) {
        require_map(s, "solver");
        check_keys(s, "solver", {"route", "representation", "threads"});
        if (s["route"]) cfg.solver.route = route_from(scalar_text(s["route"], "solver.route"));
        if (s["representation"]) {
            cfg.solver.representation = representation_from(scalar_text(s["representation"], "solver.representation"));
        }
        if (s["threads"]) cfg.solver.threads = static_cast<unsigned>(count_value(s["threads"], "solver.threads"));
    }
    if (root["comparison"]) cfg.comparison = comparison_from(scalar_text(root["comparison"], "comparison"));
    if (const YAML::Node f = root["fd"]) {
        require_map(f, "fd");
        check_keys(f, "fd", {"nx", "nt", "tolerance", "stretch", "refinement_factor", "startup_substeps",
                             "max_refinements", "max_nx"});
        if (f["nx"]) cfg.fd.nx = count_value(f["nx"], "fd.nx");
        if (f["nt"]) cfg.fd.nt = count_value(f["nt"], "fd.nt");
        if (f["tolerance"]) cfg.fd_tolerance = plain_number(f["tolerance"], "fd.tolerance");
        if (f["stretch"]) cfg.fd.stretch = plain_number(f["stretch"], "fd.stretch");
        if (f["refinement_factor"]) cfg.fd.refinement_factor = plain_number(f["refinement_factor"], "fd.refinement_factor");
        if (f["startup_substeps"]) cfg.fd.startup_substeps = static_cast<int>(count_value(f["startup_substeps"], "fd.startup_substeps"));
        if (f["max_refinements"]) cfg.fd.max_refinements = static_cast<int>(count_value(f["max_refinements"], "fd.max_refinements"));
        if (f["max_nx"]) cfg.fd.max_nx = count_value(f["max_nx"], "fd.max_nx");
    }
    if (const YAML::Node s = root["series"]) {
        require_map(s, "series");
        check_keys(s, "series", {"max_terms", "tail_tol"});
        if (s["max_terms"]) cfg.series.max_terms = count_value(s["max_terms"], "series.max_terms");
        if (s["tail_tol"]) cfg.series.tail_tol = plain_number(s["tail_tol"], "series.tail_tol");
    }
    if (root["output_dir"]) cfg.output_dir = scalar_text(root["output_dir"], "output_dir");

    validate(cfg);
    return cfg;
}

void emit_list(YAML::Emitter& out, const std::vector<double>& v, Dimension dim) {
    out << YAML::Flow << YAML::BeginSeq;
    for (double x : v) out << with_unit(x, dim);
    out << YAML::EndSeq;
}

void emit_list(YAML::Emitter& out, const Eigen::VectorXd& v, Dimension dim) {
    emit_list(out, std::vector<double>(v.data(), v.data() + v.size()), dim);
}

void emit_initial(YAML::Emitter& out, const InitialData& data) {
    if (std::holds_alternative<initial::Zero>(data)) {
        out << "zero";
    } else if (const auto* c = std::get_if<initial::Constant>(&data)) {
        out << YAML::BeginMap << YAML::Key << "constant" << YAML::Value << number(c->value) << YAML::EndMap;
    } else {
        const auto& s = std::get<initial::Tabulated>(data).samples;
        out << YAML::BeginMap << YAML::Key << "x" << YAML::Value;
        emit_list(out, s.at, units::kLength);
        out << YAML::Key << "value" << YAML::Value;
        emit_list(out, s.value, units::kDimensionless);
        out << YAML::EndMap;
    }
}

void emit_boundary(YAML::Emitter& out, const BoundaryData& data) {
    if (std::holds_alternative<boundary::Zero>(data)) {
        out << "zero";
    } else if (const auto* c = std::get_if<boundary::Constant>(&data)) {
        out << YAML::BeginMap << YAML::Key << "constant" << YAML::Value << number(c->value) << YAML::EndMap;
    } else if (const auto* b = std::get_if<boundary::BraesterFlux>(&data)) {
        out << YAML::BeginMap << YAML::Key << "rainfall" << YAML::Value << YAML::BeginMap;
        out << YAML::Key << "ka" << YAML::Value << with_unit(b->ka, units::kRate);
        out << YAML::Key << "offset" << YAML::Value << number(b->theta_offset);
        out << YAML::EndMap << YAML::EndMap;
    } else {
        const auto& s = std::get<boundary::Tabulated>(data).samples;
        out << YAML::BeginMap << YAML::Key << "t" << YAML::Value;
        emit_list(out, s.at, units::kTime);
        out << YAML::Key << "value" << YAML::Value;
        emit_list(out, s.value, units::kDimensionless);
        out << YAML::EndMap;
    }
}

}  // namespace

const char* to_string(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::Flooding: return "flooding";
        case ScenarioKind::RainfallFlux: return "rainfall_flux";
        case ScenarioKind::PressureTank: return "pressure_tank";
        case ScenarioKind::General: return "general";
        case ScenarioKind::HalfLine: return "half_line";
    }
    return "?";
}

const char* to_string(Comparison comparison) {
    switch (comparison) {
        case Comparison::None: return "none";
        case Comparison::FdOracle: return "fd_oracle";
        case Comparison::Tracy: return "tracy";
        case Comparison::Philip: return "philip";
    }
    return "?";
}

ScenarioKind scenario_from(std::string_view name) {
    for (auto k : {ScenarioKind::Flooding, ScenarioKind::RainfallFlux, ScenarioKind::PressureTank,
                   ScenarioKind::General, ScenarioKind::HalfLine}) {
        if (name == to_string(k)) return k;
    }
    fail("scenario", "unknown scenario '" + std::string(name) +
                         "' (expected flooding, rainfall_flux, pressure_tank, general or half_line)");
}

Comparison comparison_from(std::string_view name) {
    if (name == "fd") return Comparison::FdOracle;
    for (auto c : {Comparison::None, Comparison::FdOracle, Comparison::Tracy, Comparison::Philip}) {
        if (name == to_string(c)) return c;
    }
    fail("comparison", "unknown comparison '" + std::string(name) + "' (expected none, fd, tracy or philip)");
}

bool comparison_allowed(ScenarioKind kind, Comparison comparison) {
    switch (comparison) {
        case Comparison::None: return true;
        case Comparison::FdOracle: return kind != ScenarioKind::HalfLine;
        case Comparison::Tracy: return kind == ScenarioKind::PressureTank;
        case Comparison::Philip: return kind == ScenarioKind::Flooding;
    }
    return false;
}

std::vector<std::string> parameter_names(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::Flooding: return {"length", "d0", "k0", "theta0", "theta1"};
        case ScenarioKind::RainfallFlux: return {"length", "d0", "k0", "theta0", "ka", "theta_offset (optional)"};
        case ScenarioKind::PressureTank: return {"length", "a", "ks", "theta0", "theta1", "h0"};
        case ScenarioKind::General: return {"length", "d0", "k0", "initial", "left", "right"};
        case ScenarioKind::HalfLine: return {"d0", "k0", "initial", "left"};
    }
    return {};
}

ProfileProblem ScenarioConfig::profile() const {
    switch (scenario) {
        case ScenarioKind::Flooding:
            return {length, {d0, k0}, initial::Constant{theta0}, boundary::Constant{theta1}, boundary::Constant{theta0}};
        case ScenarioKind::RainfallFlux:
            return {length, {d0, k0}, initial::Constant{theta0}, boundary::BraesterFlux{ka, theta_offset},
                    boundary::Constant{theta0}};
        case ScenarioKind::PressureTank:
            return {tank.length, tank.coeffs(), initial::Zero{}, boundary::Zero{}, boundary::Constant{1.0 - tank.eps()}};
        case ScenarioKind::General:
            return {length, {d0, k0}, initial, left, right};
        case ScenarioKind::HalfLine:
            break;
    }
    throw Error(ErrorCode::InvalidArgument, "the half-line scenario has no bounded profile");
}

ValueKind ScenarioConfig::value_kind() const {
    return scenario == ScenarioKind::PressureTank ? ValueKind::PressureHead : ValueKind::WaterContent;
}

ScenarioConfig parse_config(const std::string& text, const std::string& source) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        fail(source, std::string("not valid YAML: ") + e.what());
    }
    try {
        return from_node(root, source);
    } catch (const YAML::Exception& e) {
        fail(source, std::string("malformed entry: ") + e.what());
    }
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("config", "cannot open '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), path);
}

std::string to_yaml(const ScenarioConfig& cfg, const std::string& version) {
    YAML::Emitter out;
    out << YAML::BeginMap;
    out << YAML::Key << "scenario" << YAML::Value << to_string(cfg.scenario);
    if (!cfg.description.empty()) out << YAML::Key << "description" << YAML::Value << cfg.description;

    out << YAML::Key << "parameters" << YAML::Value << YAML::BeginMap;
    for (const auto& p : cfg.parameters) {
        if (p.name.find('.') != std::string::npos) continue;  // nested data are written below
        out << YAML::Key << p.name << YAML::Value << with_unit(p.value, p.dim);
    }
    if (cfg.scenario == ScenarioKind::General || cfg.scenario == ScenarioKind::HalfLine) {
        out << YAML::Key << "initial" << YAML::Value;
        emit_initial(out, cfg.initial);
        out << YAML::Key << "left" << YAML::Value;
        emit_boundary(out, cfg.left);
        if (cfg.scenario == ScenarioKind::General) {
            out << YAML::Key << "right" << YAML::Value;
            emit_boundary(out, cfg.right);
        }
    }
    out << YAML::EndMap;

    out << YAML::Key << "grid" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "x" << YAML::Value;
    emit_list(out, cfg.xs, units::kLength);
    out << YAML::Key << "t" << YAML::Value;
    emit_list(out, cfg.ts, units::kTime);
    out << YAML::EndMap;

    const ContourConfig& cc = cfg.solver.contour;
    out << YAML::Key << "contour" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "ray_angle" << YAML::Value << number(cc.ray_angle);
    out << YAML::Key << "rel_tol" << YAML::Value << number(cc.rel_tol);
    out << YAML::Key << "abs_tol" << YAML::Value << number(cc.abs_tol);
    out << YAML::Key << "max_nodes" << YAML::Value << cc.max_nodes;
    out << YAML::Key << "truncation_safety" << YAML::Value << number(cc.truncation_safety);
    out << YAML::EndMap;

    out << YAML::Key << "solver" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "route" << YAML::Value << route_name(cfg.solver.route);
    out << YAML::Key << "representation" << YAML::Value << representation_name(cfg.solver.representation);
    out << YAML::Key << "threads" << YAML::Value << cfg.solver.threads;
    out << YAML::EndMap;

    out << YAML::Key << "comparison" << YAML::Value << to_string(cfg.comparison);

    out << YAML::Key << "fd" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "nx" << YAML::Value << cfg.fd.nx;
    out << YAML::Key << "nt" << YAML::Value << cfg.fd.nt;
    out << YAML::Key << "tolerance" << YAML::Value << number(cfg.fd_tolerance);
    out << YAML::Key << "stretch" << YAML::Value << number(cfg.fd.stretch);
    out << YAML::Key << "refinement_factor" << YAML::Value << number(cfg.fd.refinement_factor);
    out << YAML::Key << "startup_substeps" << YAML::Value << cfg.fd.startup_substeps;
    out << YAML::Key << "max_refinements" << YAML::Value << cfg.fd.max_refinements;
    out << YAML::Key << "max_nx" << YAML::Value << cfg.fd.max_nx;
    out << YAML::EndMap;

    out << YAML::Key << "series" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "max_terms" << YAML::Value << cfg.series.max_terms;
    out << YAML::Key << "tail_tol" << YAML::Value << number(cfg.series.tail_tol);
    out << YAML::EndMap;

    out << YAML::Key << "output_dir" << YAML::Value << cfg.output_dir;

    out << YAML::Key << "manifest" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "tool" << YAML::Value << version;
    out << YAML::Key << "source" << YAML::Value << cfg.source;
    out << YAML::Key << "base_units" << YAML::Value << "length cm, time s";
    out << YAML::Key << "conversions" << YAML::Value << YAML::BeginSeq;
    for (const auto& p : cfg.parameters) {
        out << YAML::Flow << YAML::BeginMap;
        out << YAML::Key << "name" << YAML::Value << p.name;
        out << YAML::Key << "given" << YAML::Value << p.given;
        out << YAML::Key << "base" << YAML::Value << with_unit(p.value, p.dim);
        out << YAML::EndMap;
    }
    out << YAML::EndSeq;
    out << YAML::EndMap;

    out << YAML::EndMap;
    return std::string(out.c_str()) + "\n";
}

}  // namespace infil::app
