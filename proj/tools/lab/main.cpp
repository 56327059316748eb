// korenblum_lab: run the numerical experiments from JSON configs.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "experiments.hpp"

namespace {

nlohmann::json load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return nlohmann::json::parse(in, nullptr, true, true);
}

}  // namespace

int main(int argc, char** argv)
{
    using namespace korenblum::lab;
    CLI::App app{"Radial growth experiments in the Korenblum space"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    auto* run_cmd = app.add_subcommand("run", "run an experiment config");
    run_cmd->add_option("config", config_path, "JSON config")->required()->check(CLI::ExistingFile);
    run_cmd->add_option("-o,--output-dir", out_dir, "override the config's output_dir");

    auto* val_cmd = app.add_subcommand("validate", "check a config without running it");
    val_cmd->add_option("config", config_path, "JSON config")->required()->check(CLI::ExistingFile);

    bool show_defaults = false;
    auto* list_cmd = app.add_subcommand("list-experiments", "list experiment ids");
    list_cmd->add_flag("--defaults", show_defaults, "print default params as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*list_cmd) {
            for (const auto& e : experiments()) {
                std::printf("%-18s %s\n", e.id.c_str(), e.description.c_str());
                if (show_defaults)
                    std::printf("%s\n", e.defaults.dump(2).c_str());
            }
            return 0;
        }
        const nlohmann::json cfg = load(config_path);
        if (*val_cmd) {
            const auto v = validate(cfg);
            for (const auto& m : v)
                std::printf("violation: %s\n", m.c_str());
            if (v.empty())
                std::printf("ok\n");
            return v.empty() ? 0 : 2;
        }
        const auto t0 = std::chrono::steady_clock::now();
        const RunReport rep = run(cfg, out_dir);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        for (const auto& c : rep.checks)
            std::printf("%s %s %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.measured.dump().c_str());
        std::printf("%s: %zu files, %.2f s\n", rep.experiment.c_str(), rep.files.size(), secs);
        return rep.all_pass() ? 0 : 1;
    } catch (const ConfigError& e) {
        for (const auto& m : e.violations)
            std::fprintf(stderr, "violation: %s\n", m.c_str());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
