// Command-line front end: solve, validate and list scenarios.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "infil/app/config.hpp"
#include "infil/app/scenario.hpp"
#include "infil/core.hpp"

#ifndef INFIL_CONFIG_DIR
#define INFIL_CONFIG_DIR "configs"
#endif

namespace {

using namespace infil;

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kNumericalError = 2;

int report_error(const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_numerical(e.code()) ? kNumericalError : kConfigError;
}

int cmd_solve(const std::string& path, const std::optional<std::string>& out, bool sequential,
              const std::optional<std::string>& compare) {
    try {
        app::ScenarioConfig cfg = app::load_config(path);
        app::RunOptions options;
        options.out_dir = out;
        options.sequential = sequential;
        if (compare) options.comparison = app::comparison_from(*compare);
        std::cout << app::tool_version() << ": " << app::to_string(cfg.scenario) << " from " << path << '\n';
        const app::RunResult result = app::run_scenario(std::move(cfg), options, std::cout);
        std::cout << "  wrote " << result.out_dir << "/{solution.csv, manifest.yaml, report.yaml, plot.gp"
                  << (result.reference ? ", reference.csv" : "") << "}\n";
        return kOk;
    } catch (const Error& e) {
        return report_error(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumericalError;
    }
}

int cmd_validate(const std::string& path) {
    try {
        const app::ScenarioConfig cfg = app::load_config(path);
        std::cout << path << ": valid " << app::to_string(cfg.scenario) << " configuration\n";
        for (const auto& p : cfg.parameters) {
            std::cout << "  " << p.name << " = " << p.given << "  ->  " << p.value << ' '
                      << units::base_symbol(p.dim) << '\n';
        }
        std::cout << "  grid: " << cfg.xs.size() << " positions x " << cfg.ts.size() << " times\n";
        std::cout << "  comparison: " << app::to_string(cfg.comparison) << '\n';
        return kOk;
    } catch (const Error& e) {
        return report_error(e);
    }
}

int cmd_list(const std::string& dir) {
    std::cout << "scenarios:\n";
    for (auto kind : {app::ScenarioKind::Flooding, app::ScenarioKind::RainfallFlux, app::ScenarioKind::PressureTank,
                      app::ScenarioKind::General, app::ScenarioKind::HalfLine}) {
        std::cout << "  " << app::to_string(kind) << "\n    parameters:";
        for (const auto& p : app::parameter_names(kind)) std::cout << ' ' << p;
        std::cout << "\n    comparisons:";
        for (auto c : {app::Comparison::None, app::Comparison::FdOracle, app::Comparison::Tracy,
                       app::Comparison::Philip}) {
            if (app::comparison_allowed(kind, c)) std::cout << ' ' << app::to_string(c);
        }
        std::cout << '\n';
    }

    std::vector<std::filesystem::path> files;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
        if (entry.path().extension() == ".yaml") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::cout << "bundled configs in " << dir << ":\n";
    if (files.empty()) std::cout << "  (none found)\n";
    for (const auto& f : files) {
        try {
            const app::ScenarioConfig cfg = app::load_config(f.string());
            std::cout << "  " << f.stem().string() << " [" << app::to_string(cfg.scenario) << "]";
            if (!cfg.description.empty()) std::cout << "\n    " << cfg.description;
            std::cout << '\n';
        } catch (const Error& e) {
            std::cout << "  " << f.stem().string() << " (invalid: " << e.what() << ")\n";
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App cli{"Water content profiles of the linearized Richards equation by the unified transform method"};
    cli.set_version_flag("--version", app::tool_version());
    cli.require_subcommand(1);

    std::string config;
    std::optional<std::string> out;
    std::optional<std::string> compare;
    bool sequential = false;
    auto* solve = cli.add_subcommand("solve", "Solve a configured scenario and write its artifacts");
    solve->add_option("--config", config, "Scenario configuration (YAML)")->required();
    solve->add_option("--out", out, "Output directory (overrides output_dir)");
    solve->add_flag("--sequential", sequential, "Single-threaded evaluation, bit-reproducible");
    solve->add_option("--compare", compare, "Comparison: fd, tracy, philip or none")
        ->check(CLI::IsMember({"fd", "fd_oracle", "tracy", "philip", "none"}));

    std::string validate_path;
    auto* validate = cli.add_subcommand("validate", "Check a configuration and print it in base units");
    validate->add_option("--config", validate_path, "Scenario configuration (YAML)")->required();

    std::string config_dir = INFIL_CONFIG_DIR;
    auto* list = cli.add_subcommand("list-scenarios", "List scenario types and bundled configurations");
    list->add_option("--dir", config_dir, "Directory with bundled configurations");

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = cli.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    if (*solve) return cmd_solve(config, out, sequential, compare);
    if (*validate) return cmd_validate(validate_path);
    if (*list) return cmd_list(config_dir);
    return kConfigError;
}
