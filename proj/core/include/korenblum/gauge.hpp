#pragma once

#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "korenblum/types.hpp"

namespace korenblum {

// Measuring function lambda(t) on (0, 1).
class GaugeFunction {
public:
    enum class Kind { Power, LogScale, Table };

    // t^d
    static GaugeFunction power(double d);
    // t |log t|^alpha; increasing on (0, e^-alpha)
    static GaugeFunction log_scale(double alpha);
    // piecewise linear in (log t, log lambda) through the given points
    static GaugeFunction table(std::vector<std::pair<double, double>> points);

    Kind kind() const { return kind_; }
    double parameter() const { return p_; }

    double operator()(double t) const;
    // log lambda(e^{log_t}); works where t itself underflows
    double log_value(double log_t) const;
    double log_value(const Rational& t) const;

    nlohmann::json to_json() const;
    static GaugeFunction from_json(const nlohmann::json& j);

private:
    Kind kind_ = Kind::Power;
    double p_ = 1.0;
    std::vector<std::pair<double, double>> table_;  // (log t, log lambda), sorted
};

}  // namespace korenblum
