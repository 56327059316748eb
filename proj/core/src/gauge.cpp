#include "korenblum/gauge.hpp"

#include <algorithm>
#include <cmath>

namespace korenblum {

GaugeFunction GaugeFunction::power(double d)
{
    if (!(d > 0))
        throw DomainError("GaugeFunction::power: exponent must be positive");
    GaugeFunction g;
    g.kind_ = Kind::Power;
    g.p_ = d;
    return g;
}

GaugeFunction GaugeFunction::log_scale(double alpha)
{
    if (!(alpha >= 0))
        throw DomainError("GaugeFunction::log_scale: alpha must be >= 0");
    GaugeFunction g;
    g.kind_ = Kind::LogScale;
    g.p_ = alpha;
    return g;
}

GaugeFunction GaugeFunction::table(std::vector<std::pair<double, double>> points)
{
    if (points.size() < 2)
        throw DomainError("GaugeFunction::table: need at least two points");
    std::sort(points.begin(), points.end());
    GaugeFunction g;
    g.kind_ = Kind::Table;
    double last = -std::numeric_limits<double>::infinity();
    for (const auto& [t, v] : points) {
        if (!(t > 0 && v > 0))
            throw DomainError("GaugeFunction::table: points must be positive");
        if (!(v > last))
            throw DomainError("GaugeFunction::table: values must increase with t");
        last = v;
        g.table_.emplace_back(std::log(t), std::log(v));
    }
    return g;
}

double GaugeFunction::operator()(double t) const
{
    if (t <= 0)
        return 0.0;
    return std::exp(log_value(std::log(t)));
}

double GaugeFunction::log_value(double log_t) const
{
    switch (kind_) {
    case Kind::Power:
        return p_ * log_t;
    case Kind::LogScale:
        return log_t + p_ * std::log(std::abs(log_t));
    case Kind::Table: {
        const auto& tb = table_;
        if (log_t < tb.front().first || log_t > tb.back().first)
            throw DomainError("GaugeFunction: argument outside the table range");
        auto it = std::upper_bound(tb.begin(), tb.end(), log_t,
                                   [](double x, const auto& p) { return x < p.first; });
        if (it == tb.end())
            return tb.back().second;
        const auto& hi = *it;
        const auto& lo = *(it - 1);
        const double w = (log_t - lo.first) / (hi.first - lo.first);
        return lo.second + w * (hi.second - lo.second);
    }
    }
    return 0.0;
}

double GaugeFunction::log_value(const Rational& t) const
{
    return log_value(log_of(t));
}

nlohmann::json GaugeFunction::to_json() const
{
    switch (kind_) {
    case Kind::Power:
        return {{"kind", "power"}, {"d", p_}};
    case Kind::LogScale:
        return {{"kind", "log-scale"}, {"alpha", p_}};
    case Kind::Table: {
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& [lt, lv] : table_)
            pts.push_back({std::exp(lt), std::exp(lv)});
        return {{"kind", "table"}, {"points", pts}};
    }
    }
    return {};
}

GaugeFunction GaugeFunction::from_json(const nlohmann::json& j)
{
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "power")
        return power(j.at("d").get<double>());
    if (kind == "log-scale")
        return log_scale(j.at("alpha").get<double>());
    if (kind == "table") {
        std::vector<std::pair<double, double>> pts;
        for (const auto& p : j.at("points"))
            pts.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
        return table(std::move(pts));
    }
    throw DomainError("GaugeFunction: unknown kind '" + kind + "'");
}

}  // namespace korenblum
