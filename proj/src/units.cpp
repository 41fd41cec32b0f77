#include "infil/units.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "infil/core.hpp"

namespace infil::units {

namespace {

struct Unit {
    double factor;
    Dimension dim;
};

const std::map<std::string, Unit, std::less<>>& unit_table() {
    static const std::map<std::string, Unit, std::less<>> table = {
        {"mm", {0.1, kLength}},    {"cm", {1.0, kLength}},          {"m", {100.0, kLength}},
        {"km", {1e5, kLength}},    {"s", {1.0, kTime}},             {"sec", {1.0, kTime}},
        {"min", {60.0, kTime}},    {"h", {3600.0, kTime}},          {"hr", {3600.0, kTime}},
        {"hour", {3600.0, kTime}}, {"d", {86400.0, kTime}},         {"day", {86400.0, kTime}},
        {"days", {86400.0, kTime}}, {"1", {1.0, kDimensionless}},
    };
    return table;
}

[[noreturn]] void fail(std::string_view text, const std::string& why) {
    throw Error(ErrorCode::ConfigError, "cannot read quantity '" + std::string(text) + "': " + why);
}

// One factor such as "cm2", "cm^2", "s^-1" or "1".
Unit parse_factor(std::string_view token, std::string_view text) {
    std::size_t split = 0;
    while (split < token.size() && std::isalpha(static_cast<unsigned char>(token[split]))) ++split;
    std::string_view name = token.substr(0, split);
    std::string_view power = token.substr(split);
    if (name.empty()) {
        if (token == "1") return unit_table().find("1")->second;
        fail(text, "bad unit '" + std::string(token) + "'");
    }
    const auto it = unit_table().find(name);
    if (it == unit_table().end()) fail(text, "unknown unit '" + std::string(name) + "'");
    int p = 1;
    if (!power.empty()) {
        if (power.front() == '^') power.remove_prefix(1);
        const auto [ptr, ec] = std::from_chars(power.data(), power.data() + power.size(), p);
        if (ec != std::errc() || ptr != power.data() + power.size()) {
            fail(text, "bad exponent in '" + std::string(token) + "'");
        }
    }
    return {std::pow(it->second.factor, p), {it->second.dim.length * p, it->second.dim.time * p}};
}

}  // namespace

std::string describe(Dimension dim) {
    if (dim == kDimensionless) return "dimensionless";
    if (dim == kLength) return "length";
    if (dim == kTime) return "time";
    if (dim == kVelocity) return "length/time";
    if (dim == kDiffusivity) return "length^2/time";
    if (dim == kRate) return "1/time";
    if (dim == kInverseLength) return "1/length";
    std::ostringstream out;
    out << "length^" << dim.length << " time^" << dim.time;
    return out.str();
}

std::string base_symbol(Dimension dim) {
    std::string num;
    std::string den;
    auto add = [](std::string& s, const char* sym, int p) {
        if (p == 0) return;
        s += sym;
        if (p > 1) s += std::to_string(p);
    };
    add(dim.length > 0 ? num : den, "cm", std::abs(dim.length));
    add(dim.time > 0 ? num : den, "s", std::abs(dim.time));
    if (num.empty() && den.empty()) return "";
    if (den.empty()) return num;
    return (num.empty() ? std::string("1") : num) + "/" + den;
}

Quantity parse(std::string_view text) {
    std::size_t start = 0;
    while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
    double value = 0.0;
    const char* first = text.data() + start;
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc()) fail(text, "no leading number");
    if (!std::isfinite(value)) fail(text, "not finite");

    std::string rest(ptr, last);
    std::string expr;
    for (char ch : rest) {
        if (!std::isspace(static_cast<unsigned char>(ch))) expr += ch;
    }
    Quantity q{value, kDimensionless};
    if (expr.empty()) return q;

    // factors separated by '*' or '/', everything after a '/' sits in the denominator
    int sign = 1;
    std::size_t pos = 0;
    while (pos <= expr.size()) {
        const std::size_t next = expr.find_first_of("*/", pos);
        const std::string token = expr.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (token.empty()) fail(text, "empty unit factor");
        const Unit u = parse_factor(token, text);
        q.value *= sign > 0 ? u.factor : 1.0 / u.factor;
        q.dim.length += sign * u.dim.length;
        q.dim.time += sign * u.dim.time;
        if (next == std::string::npos) break;
        if (expr[next] == '/') sign = -1;
        pos = next + 1;
    }
    return q;
}

double parse_as(std::string_view text, Dimension expected, std::string_view field) {
    Quantity q;
    try {
        q = parse(text);
    } catch (const Error& e) {
        throw Error(ErrorCode::ConfigError, std::string(field) + ": " + e.detail());
    }
    if (!(q.dim == expected)) {
        throw Error(ErrorCode::ConfigError, std::string(field) + ": expected " + describe(expected) +
                                                " but '" + std::string(text) + "' is " + describe(q.dim));
    }
    return q.value;
}

}  // namespace infil::units
