#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace korenblum::lab {

struct Check {
    std::string name;
    bool pass = false;
    nlohmann::json measured;
};

struct RunReport {
    std::string experiment;
    nlohmann::json config;  // effective config, defaults filled in
    std::vector<Check> checks;
    std::vector<std::string> files;  // relative to the output directory
    nlohmann::json results;          // experiment-specific values

    bool all_pass() const;
    nlohmann::json to_json() const;
};

struct Series {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

// Plain SVG line chart; non-finite points are dropped.
std::string svg_plot(const std::string& title, const std::string& xlabel, const std::string& ylabel,
                     const std::vector<Series>& series);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace korenblum::lab
