#include "korenblum/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "korenblum/parallel.hpp"

namespace korenblum {

namespace {

constexpr double ln2 = std::numbers::ln2;

AngleFraction dyadic_turns(double turns, double s)
{
    const int bits = int(std::ceil(s)) + 48;
    const double scaled = std::ldexp(turns, 48) * std::exp2(std::ceil(s));
    return AngleFraction::dyadic(BigInt(static_cast<long long>(std::llround(scaled))), unsigned(bits));
}

}  // namespace

std::string GrowthProfile::to_csv() const
{
    std::ostringstream os;
    os.precision(17);
    os << "s,quotient\n";
    for (const auto& x : samples)
        os << x.s << ',' << x.quotient << '\n';
    return os.str();
}

GrowthProfile profile(const Evaluator& f, const AngleFraction& theta, std::span<const double> scales,
                      const ProfileOptions& options)
{
    GrowthProfile p;
    p.theta = theta;
    p.tolerance = options.tolerance;
    double last = 0;
    for (double s : scales) {
        if (!(s > last))
            throw DomainError("profile: scales must be positive and strictly increasing");
        last = s;
        const RadialPoint z = RadialPoint::from_scale(s, theta);
        if (options.skip && options.skip(z)) {
            ++p.skipped;
            continue;
        }
        const double v = f(z);
        double q;
        if (options.mode == ProfileMode::LogModulus && std::isinf(v) && v < 0) {
            p.has_zero = true;
            q = options.zero_quotient;
        } else {
            q = v / (s * ln2);
        }
        p.samples.push_back({s, q});
    }
    p.tail_window = (p.samples.size() + 1) / 2;
    return p;
}

std::string Classification::label_string() const
{
    std::string out;
    auto add = [&](const char* s) {
        if (!out.empty())
            out += ' ';
        out += s;
    };
    if (labels & DPlus)
        add("D+");
    if (labels & DMinus)
        add("D-");
    if (labels & GPlus)
        add("G+");
    if (labels & Neutral)
        add("neutral");
    return out;
}

Classification classify(const GrowthProfile& p, double threshold)
{
    if (p.tail_window == 0 || p.tail_window > p.samples.size())
        throw DomainError("classify: empty tail window");
    Classification c;
    const auto first = p.samples.end() - std::ptrdiff_t(p.tail_window);
    c.liminf_est = std::numeric_limits<double>::infinity();
    c.limsup_est = -c.liminf_est;
    for (auto it = first; it != p.samples.end(); ++it) {
        c.liminf_est = std::min(c.liminf_est, it->quotient);
        c.limsup_est = std::max(c.limsup_est, it->quotient);
    }
    if (c.liminf_est >= threshold)
        c.labels |= DPlus;
    if (c.limsup_est <= -threshold)
        c.labels |= DMinus;
    if (c.limsup_est >= threshold)
        c.labels |= GPlus;
    if (c.labels == 0)
        c.labels = Neutral;
    if (p.tolerance > 0) {
        const double qtol = p.tolerance / (first->s * ln2);
        const double m = std::min({std::abs(c.liminf_est - threshold),
                                   std::abs(c.limsup_est + threshold),
                                   std::abs(c.limsup_est - threshold)});
        c.indeterminate = m < 10 * qtol;
    }
    return c;
}

double ScanSummary::fraction(Label l) const
{
    if (angles.empty())
        return 0.0;
    std::size_t n = 0;
    switch (l) {
    case DPlus:
        n = count_dplus;
        break;
    case DMinus:
        n = count_dminus;
        break;
    case GPlus:
        n = count_gplus;
        break;
    case Neutral:
        n = count_neutral;
        break;
    }
    return double(n) / double(angles.size());
}

nlohmann::json ScanSummary::to_json() const
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& a : angles)
        rows.push_back({{"theta", a.theta.str()},
                        {"labels", a.cls.label_string()},
                        {"liminf_est", a.cls.liminf_est},
                        {"limsup_est", a.cls.limsup_est},
                        {"indeterminate", a.cls.indeterminate},
                        {"excluded", a.excluded}});
    return {{"angles", rows},
            {"fraction_dplus", fraction(DPlus)},
            {"fraction_dminus", fraction(DMinus)},
            {"fraction_gplus", fraction(GPlus)},
            {"fraction_neutral", fraction(Neutral)},
            {"excluded", count_excluded}};
}

ScanSummary scan_angles(const Evaluator& f, const std::vector<AngleFraction>& angles,
                        std::span<const double> scales, double threshold,
                        const ProfileOptions& options, unsigned threads)
{
    if (angles.empty() || scales.empty())
        throw DomainError("scan_angles: empty grid");
    ScanSummary out;
    out.angles.resize(angles.size());
    parallel_for(
        angles.size(),
        [&](std::size_t i) {
            AngleResult& r = out.angles[i];
            r.theta = angles[i];
            const GrowthProfile p = profile(f, angles[i], scales, options);
            if (p.tail_window == 0) {
                r.excluded = true;
                return;
            }
            r.cls = classify(p, threshold);
        },
        threads == 0 ? worker_count() : threads);
    for (const auto& r : out.angles) {
        if (r.excluded) {
            ++out.count_excluded;
            continue;
        }
        out.count_dplus += r.cls.has(DPlus);
        out.count_dminus += r.cls.has(DMinus);
        out.count_gplus += r.cls.has(GPlus);
        out.count_neutral += r.cls.has(Neutral);
    }
    return out;
}

PropagationResult nontangential_propagation_check(const Evaluator& f, const AngleFraction& theta,
                                                  double sigma, std::span<const double> scales,
                                                  std::span<const double> ratios,
                                                  PropagationMode mode)
{
    if (!(sigma > 0))
        throw DomainError("nontangential_propagation_check: sigma must be positive");
    if (!std::is_sorted(ratios.begin(), ratios.end()))
        throw DomainError("nontangential_propagation_check: ratios must be ascending");
    const double sign = mode == PropagationMode::Growth ? 1.0 : -1.0;
    PropagationResult out;
    for (double s : scales) {
        PropagationScale ps;
        ps.s = s;
        const RadialPoint z = RadialPoint::from_scale(s, theta);
        const double L = 1 + s * ln2;  // log(e / (1 - r))
        ps.premise = sign * f(z) > sigma * L;
        if (ps.premise) {
            for (double c : ratios) {
                const double turns = c * z.gap() / (2 * std::numbers::pi);
                const AngleFraction d = dyadic_turns(turns, s);
                const bool ok = sign * f(z.with_angle(theta + d)) > sigma / 2 * L &&
                                sign * f(z.with_angle(theta - d)) > sigma / 2 * L;
                if (!ok)
                    break;
                ps.best_ratio = c;
            }
            out.tau1 = out.tau1 ? std::min(*out.tau1, ps.best_ratio) : ps.best_ratio;
            out.max_best_ratio = std::max(out.max_best_ratio, ps.best_ratio);
        }
        out.scales.push_back(ps);
    }
    return out;
}

std::vector<double> quarter_octave_ratios(int lo, int hi)
{
    std::vector<double> out;
    for (int j = lo; j <= hi; ++j)
        out.push_back(std::exp2(j / 4.0));
    return out;
}

}  // namespace korenblum
