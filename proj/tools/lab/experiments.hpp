#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "report.hpp"

namespace korenblum::lab {

struct Experiment {
    std::string id;
    std::string description;
    nlohmann::json defaults;
    // extra checks beyond types and unknown keys; params already merged with defaults
    std::function<std::vector<std::string>(const nlohmann::json&)> validate;
    std::function<void(const nlohmann::json&, const std::filesystem::path&, RunReport&)> run;
};

const std::vector<Experiment>& experiments();

struct ConfigError : std::runtime_error {
    std::vector<std::string> violations;
    explicit ConfigError(std::vector<std::string> v);
};

// {experiment, output_dir, params} with every default filled in.
// Throws ConfigError on an unknown experiment, unknown keys or type mismatches.
nlohmann::json effective_config(const nlohmann::json& config);

// Empty iff run() would start.
std::vector<std::string> validate(const nlohmann::json& config);

// Validates, runs, and writes summary.json plus the experiment's files into
// out_dir (or the config's output_dir when out_dir is empty).
RunReport run(const nlohmann::json& config, const std::filesystem::path& out_dir = {});

}  // namespace korenblum::lab
