#include "experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "korenblum/arc_measure.hpp"
#include "korenblum/cantor.hpp"
#include "korenblum/disk.hpp"
#include "korenblum/growth.hpp"
#include "korenblum/horowitz.hpp"
#include "korenblum/lacunary.hpp"
#include "korenblum/parallel.hpp"
#include "korenblum/spiral.hpp"

namespace korenblum::lab {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

constexpr double ln2 = std::numbers::ln2;
constexpr double pi = std::numbers::pi;

std::string join(const std::vector<std::string>& v)
{
    std::string s;
    for (const auto& x : v)
        s += (s.empty() ? "" : "; ") + x;
    return s;
}

template <class T>
T get(const json& p, const char* key)
{
    return p.at(key).get<T>();
}

AngleFraction parse_angle(const std::string& s)
{
    return AngleFraction::from_rational(parse_rational(s));
}

class Csv {
public:
    explicit Csv(const std::string& header) { os_ << header << '\n'; os_.precision(17); }
    template <class... T>
    void row(const T&... cols)
    {
        bool first = true;
        ((os_ << (first ? "" : ",") << cols, first = false), ...);
        os_ << '\n';
    }
    std::string str() const { return os_.str(); }

private:
    std::ostringstream os_;
};

void emit(RunReport& rep, const fs::path& out, const std::string& name, const std::string& text)
{
    write_text(out / name, text);
    rep.files.push_back(name);
}

std::vector<std::string> require(std::initializer_list<std::pair<bool, std::string>> conds)
{
    std::vector<std::string> v;
    for (const auto& [ok, msg] : conds)
        if (!ok)
            v.push_back(msg);
    return v;
}

// poisson-checks

void run_poisson(const json& p, const fs::path& out, RunReport& rep)
{
    const double tol = get<double>(p, "normalization_tol");
    json rows = json::array();
    double worst = 0;
    for (double s : p.at("scales")) {
        const double d = std::exp2(-s);
        const double v = poisson_normalization(d);
        worst = std::max(worst, std::abs(v - 1));
        rows.push_back({{"s", s}, {"integral", v}, {"error", std::abs(v - 1)}});
    }
    rep.results["normalization"] = rows;
    rep.checks.push_back({"poisson-normalization", worst < tol, {{"max_error", worst}, {"tolerance", tol}}});

    std::mt19937_64 rng(get<std::uint64_t>(p, "seed"));
    std::uniform_real_distribution<double> U(0.0, 1.0);
    const int samples = get<int>(p, "harnack_samples");
    const double s_max = get<double>(p, "harnack_s_max");
    int violations = 0;
    double smallest = INFINITY;
    for (int i = 0; i < samples; ++i) {
        const double s = 0.05 + (s_max - 0.05) * U(rng);
        const double d = std::exp2(-s);
        const double tau = 0.01 + 0.98 * U(rng);
        double delta = 0;
        while (!(delta > 0))
            delta = U(rng) * tau * d;
        const double theta = pi * (2 * U(rng) - 1);
        const double m = harnack_shift_margin(1 - d, tau, delta, std::span(&theta, 1));
        smallest = std::min(smallest, m * d);
        violations += !(m > 0);
    }
    rep.checks.push_back({"harnack-shift", violations == 0,
                          {{"samples", samples}, {"violations", violations}, {"min_margin_times_gap", smallest}}});

    const double d = std::exp2(-get<double>(p, "kernel_plot_scale"));
    const int n = 2048;
    bool even = true, decreasing = true, q_sign = true, q_odd = true;
    double prev = INFINITY;
    for (int i = 0; i <= n; ++i) {
        const double th = pi * i / n;
        const double P = poisson_kernel(d, th);
        even = even && P == poisson_kernel(d, -th);
        decreasing = decreasing && P <= prev;
        prev = P;
        const double Q = poisson_angular_derivative(d, th);
        q_sign = q_sign && Q >= 0;
        q_odd = q_odd && Q == -poisson_angular_derivative(d, -th);
    }
    rep.checks.push_back({"kernel-shape", even && decreasing && q_sign && q_odd,
                          {{"even", even}, {"decreasing", decreasing}, {"Q_nonnegative", q_sign}, {"Q_odd", q_odd}}});

    Csv csv("theta,P,Q");
    Series sp{"P", {}};
    for (int i = -360; i <= 360; ++i) {
        const double th = pi * i / 360;
        const double P = poisson_kernel(d, th);
        csv.row(th, P, poisson_angular_derivative(d, th));
        sp.points.emplace_back(th, P);
    }
    emit(rep, out, "profile_kernel.csv", csv.str());
    emit(rep, out, "plot_kernel.svg", svg_plot("Poisson kernel, 1 - r = " + std::to_string(d), "theta", "P", {sp}));
}

std::vector<std::string> validate_poisson(const json& p)
{
    auto v = require({{get<int>(p, "harnack_samples") >= 1, "harnack_samples must be >= 1"},
                      {get<int>(p, "harnack_samples") <= 10'000'000, "harnack_samples exceeds budget 1e7"},
                      {get<double>(p, "harnack_s_max") > 0.05, "harnack_s_max must exceed 0.05"},
                      {get<double>(p, "harnack_s_max") <= 40, "harnack_s_max must be <= 40"},
                      {get<double>(p, "normalization_tol") > 0, "normalization_tol must be positive"},
                      {get<double>(p, "kernel_plot_scale") > 0, "kernel_plot_scale must be positive"}});
    for (double s : p.at("scales"))
        if (!(s >= 0 && s <= 40))
            v.push_back("scales must lie in [0, 40]");
    return v;
}

// lacunary-growth

bool in_trig_generation(const AngleFraction& x, int A, int g)
{
    for (int k = 0; k <= g; ++k)
        if (std::abs(x.times_pow2(int_pow(A, k)).centered()) > 0.125)
            return false;
    return true;
}

void run_lacunary(const json& p, const fs::path& out, RunReport& rep)
{
    const int A = get<int>(p, "A");
    const LacunaryParams lp(A);
    const double tol = get<double>(p, "tol");
    const std::uint64_t seed = get<std::uint64_t>(p, "seed");

    const double CA = lacunary_constant(A);
    {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> S(0.0, get<double>(p, "bound_s_max"));
        std::uniform_int_distribution<std::uint64_t> J(0, (std::uint64_t(1) << 62) - 1);
        const int n = get<int>(p, "bound_points");
        int violations = 0;
        double worst = 0;
        for (int i = 0; i < n; ++i) {
            const double s = i == 0 ? 0.0 : S(rng);
            const AngleFraction th = AngleFraction::dyadic(BigInt(J(rng)), 62);
            const RadialPoint z = s == 0 ? RadialPoint() : RadialPoint::from_scale(s, th);
            const double u = lacunary_eval(z, lp, tol);
            const double bound = CA * (1 + s * ln2);
            worst = std::max(worst, std::abs(u) / bound);
            violations += std::abs(u) > bound;
        }
        rep.checks.push_back({"lacunary-bound", violations == 0,
                              {{"C_A", CA}, {"points", n}, {"violations", violations}, {"max_ratio", worst}}});
    }

    const int g = get<int>(p, "cantor_generation");
    const CantorSpec spec = CantorSpec::trigonometric(A, g);
    std::vector<AngleFraction> angles{AngleFraction()};
    {
        std::mt19937_64 rng(seed + 1);
        std::set<Rational> seen;
        const int want = get<int>(p, "cantor_angles");
        for (int tries = 0; int(angles.size()) < want + 1 && tries < 100 * want; ++tries) {
            const Interval I = sample_interval(spec, g, rng);
            Rational c = I.center();
            if (!seen.insert(c).second)
                continue;
            if (c < 0)
                c += 1;
            angles.push_back(AngleFraction::from_rational(c));
        }
    }
    const std::vector<double> scales = radial_grid(get<int>(p, "s_max"), get<int>(p, "steps_per_octave"));
    const double thr = get<double>(p, "threshold");
    const double need = (1 - get<double>(p, "slack")) / (8 * A * ln2);
    const Evaluator u = [&](const RadialPoint& z) { return lacunary_eval(z, lp, tol); };

    std::vector<GrowthProfile> profiles(angles.size());
    parallel_for(angles.size(), [&](std::size_t i) { profiles[i] = profile(u, angles[i], scales); });
    Csv csv("theta,s,quotient");
    double worst = INFINITY;
    int below = 0;
    for (const auto& pr : profiles) {
        const Classification c = classify(pr, thr);
        worst = std::min(worst, c.liminf_est);
        below += c.liminf_est < need;
        for (const auto& smp : pr.samples)
            csv.row(pr.theta.str(), smp.s, smp.quotient);
    }
    rep.checks.push_back({"lacunary-cantor-growth", below == 0,
                          {{"angles", angles.size()}, {"min_liminf_proxy", worst}, {"required", need}, {"below", below}}});
    emit(rep, out, "profile_lacunary.csv", csv.str());

    // Random odd-denominator angles: how D+ at this depth relates to the generation-g set.
    {
        const int n = get<int>(p, "off_cantor_angles");
        std::mt19937_64 rng(seed + 2);
        const BigInt den = boost::multiprecision::pow(BigInt(3), 25);
        std::uniform_int_distribution<std::uint64_t> J(0, den.convert_to<std::uint64_t>() - 1);
        std::vector<AngleFraction> rand_angles;
        for (int i = 0; i < n; ++i)
            rand_angles.emplace_back(BigInt(J(rng)), den);
        const ScanSummary sum = scan_angles(u, rand_angles, scales, thr);
        int inside = 0, dplus = 0, both = 0;
        for (const auto& r : sum.angles) {
            const bool in = in_trig_generation(r.theta, A, g);
            inside += in;
            dplus += r.cls.has(DPlus);
            both += in && r.cls.has(DPlus);
        }
        rep.results["random_angles"] = {
            {"count", n},
            {"dplus_fraction", sum.fraction(DPlus)},
            {"in_generation_fraction", n ? double(inside) / n : 0.0},
            {"generation_angles_dplus_fraction", inside ? double(both) / inside : 1.0},
            {"dplus_angles_in_generation_fraction", dplus ? double(both) / dplus : 1.0}};
    }

    std::vector<Series> series;
    for (std::size_t i = 0; i < std::min<std::size_t>(3, profiles.size()); ++i) {
        Series s{"theta = " + profiles[i].theta.str(), {}};
        for (const auto& smp : profiles[i].samples)
            s.points.emplace_back(smp.s, smp.quotient);
        series.push_back(std::move(s));
    }
    series.push_back({"1/(8 A log 2)", {{scales.front(), need / (1 - get<double>(p, "slack"))},
                                        {scales.back(), need / (1 - get<double>(p, "slack"))}}});
    emit(rep, out, "plot_quotient.svg", svg_plot("Lacunary growth quotient", "s = -log2(1 - r)", "u / (s log 2)", series));
}

std::vector<std::string> validate_lacunary(const json& p)
{
    const int A = get<int>(p, "A");
    return require({{A >= 2 && A <= 64, "A must lie in [2, 64]"},
                    {get<double>(p, "tol") > 0, "tol must be positive"},
                    {get<int>(p, "bound_points") >= 1 && get<int>(p, "bound_points") <= 1'000'000,
                     "bound_points must lie in [1, 1e6]"},
                    {get<double>(p, "bound_s_max") > 0 && get<double>(p, "bound_s_max") <= 1000,
                     "bound_s_max must lie in (0, 1000]"},
                    {get<int>(p, "s_max") >= 2 && get<int>(p, "s_max") <= 1000, "s_max must lie in [2, 1000]"},
                    {get<int>(p, "steps_per_octave") >= 1 && get<int>(p, "steps_per_octave") <= 64,
                     "steps_per_octave must lie in [1, 64]"},
                    {get<int>(p, "cantor_generation") >= 0 && get<int>(p, "cantor_generation") <= 4,
                     "cantor_generation must lie in [0, 4]"},
                    {get<int>(p, "cantor_angles") >= 0 && get<int>(p, "cantor_angles") <= 4096,
                     "cantor_angles must lie in [0, 4096]"},
                    {get<int>(p, "off_cantor_angles") >= 0 && get<int>(p, "off_cantor_angles") <= 65536,
                     "off_cantor_angles must lie in [0, 65536]"},
                    {get<double>(p, "slack") >= 0 && get<double>(p, "slack") < 1, "slack must lie in [0, 1)"},
                    {get<double>(p, "threshold") > 0, "threshold must be positive"}});
}

// horowitz-growth

void run_horowitz(const json& p, const fs::path& out, RunReport& rep)
{
    const double mu = get<double>(p, "mu");
    const int beta = get<int>(p, "beta");
    const double tol = get<double>(p, "tol");
    const int levels = get<int>(p, "exclusion_levels");

    {
        const HorowitzParams hp(mu, beta, get<double>(p, "q_scan"));
        int total = 0, flagged = 0;
        for (int k = 1; k <= get<int>(p, "zero_levels"); ++k) {
            const BigInt n = int_pow(beta, k);
            for (BigInt j = 0; j < n; ++j) {
                ++total;
                flagged += horowitz_eval(horowitz_zero(k, j, hp), hp, tol).exact_zero;
            }
        }
        rep.checks.push_back({"horowitz-zeros", flagged == total, {{"zeros", total}, {"flagged", flagged}}});
    }

    {
        const HorowitzParams hp(mu, beta, get<double>(p, "q_bound"));
        const double a = horowitz_exponent(hp);
        const double a1 = get<double>(p, "exponent_factor") * a;
        const double s_cal = get<double>(p, "calibration_s");
        std::mt19937_64 rng(get<std::uint64_t>(p, "seed"));
        std::uniform_real_distribution<double> S(1.0, get<double>(p, "bound_s_max"));
        std::uniform_int_distribution<std::uint64_t> J(0, (std::uint64_t(1) << 52) - 1);
        std::vector<std::pair<double, double>> pts;
        const std::size_t want = get<std::size_t>(p, "bound_points");
        std::size_t rejected = 0;
        while (pts.size() < want) {
            const double s = S(rng);
            const RadialPoint z = RadialPoint::from_scale(s, AngleFraction::dyadic(BigInt(J(rng)), 52));
            if (in_exclusion_disks(z, hp, levels)) {
                ++rejected;
                continue;
            }
            pts.emplace_back(s, horowitz_eval(z, hp, tol).log_modulus);
        }
        double C = -INFINITY;
        for (auto [s, lf] : pts)
            if (s <= s_cal)
                C = std::max(C, a1 * s * ln2 - lf);
        int verified = 0, below = 0;
        double worst = INFINITY;
        for (auto [s, lf] : pts)
            if (s > s_cal) {
                ++verified;
                const double m = lf - (a1 * s * ln2 - C);
                worst = std::min(worst, m);
                below += m < 0;
            }
        rep.checks.push_back({"horowitz-lower-bound", below == 0 && verified > 0,
                              {{"exponent", a},
                               {"exponent_used", a1},
                               {"const_from_calibration", C},
                               {"verified_points", verified},
                               {"below", below},
                               {"min_margin", worst},
                               {"rejected_in_disks", rejected}}});
    }

    {
        const HorowitzParams hp(mu, beta, get<double>(p, "q_scan"));
        double lo = INFINITY, hi = -INFINITY;
        for (double s = get<double>(p, "drift_s_min"); s <= get<double>(p, "drift_s_max"); s += 0.25) {
            const int m = horowitz_m_index(RadialPoint::from_scale(s), hp);
            const double drift = m - s * ln2 / std::log(double(beta));
            lo = std::min(lo, drift);
            hi = std::max(hi, drift);
        }
        rep.checks.push_back({"horowitz-m-drift", hi - lo <= 1, {{"min_drift", lo}, {"max_drift", hi}}});
    }

    const HorowitzParams hp(mu, beta, get<double>(p, "q_scan"));
    const Evaluator f = [&](const RadialPoint& z) { return horowitz_eval(z, hp, tol).log_modulus; };
    const std::vector<double> scales = radial_grid(get<int>(p, "s_max"), get<int>(p, "steps_per_octave"));
    ProfileOptions opt;
    opt.mode = ProfileMode::LogModulus;
    opt.tolerance = tol;
    opt.skip = [&](const RadialPoint& z) { return in_exclusion_disks(z, hp, levels); };
    const unsigned bits = get<unsigned>(p, "angles_log2");
    std::vector<AngleFraction> angles;
    for (std::uint64_t j = 0; j < (std::uint64_t(1) << bits); ++j)
        angles.push_back(AngleFraction::dyadic(BigInt(j), bits));
    const double thr = get<double>(p, "threshold");
    const ScanSummary sum = scan_angles(f, angles, scales, thr, opt);
    const double need = get<double>(p, "dplus_fraction");
    rep.checks.push_back({"horowitz-dplus-fraction", sum.fraction(DPlus) >= need,
                          {{"angles", angles.size()},
                           {"dplus_fraction", sum.fraction(DPlus)},
                           {"required", need},
                           {"all_tail_excluded", sum.count_excluded}}});
    rep.results["scan"] = {{"fraction_dplus", sum.fraction(DPlus)},
                           {"fraction_dminus", sum.fraction(DMinus)},
                           {"fraction_gplus", sum.fraction(GPlus)},
                           {"fraction_neutral", sum.fraction(Neutral)}};
    emit(rep, out, "scan.json", sum.to_json().dump(1) + "\n");

    Csv csv("theta,s,quotient");
    std::vector<Series> series;
    for (const auto& th : {AngleFraction(), AngleFraction(1, 8)}) {
        const GrowthProfile pr = profile(f, th, scales, opt);
        Series s{"theta = " + th.str(), {}};
        for (const auto& smp : pr.samples) {
            csv.row(th.str(), smp.s, smp.quotient);
            s.points.emplace_back(smp.s, smp.quotient);
        }
        series.push_back(std::move(s));
    }
    emit(rep, out, "profile_horowitz.csv", csv.str());
    emit(rep, out, "plot_quotient.svg",
         svg_plot("Horowitz product growth quotient", "s = -log2(1 - r)", "log|f| / (s log 2)", series));
}

std::vector<std::string> validate_horowitz(const json& p)
{
    std::vector<std::string> v;
    try {
        for (const char* q : {"q_scan", "q_bound"})
            for (auto& m : HorowitzParams(get<double>(p, "mu"), get<int>(p, "beta"), get<double>(p, q)).violations())
                if (std::find(v.begin(), v.end(), m) == v.end())
                    v.push_back(m);
    } catch (const DomainError& e) {
        v.push_back(e.what());
    }
    auto more = require(
        {{get<int>(p, "zero_levels") >= 1 && get<int>(p, "zero_levels") <= 6, "zero_levels must lie in [1, 6]"},
         {get<int>(p, "angles_log2") >= 1 && get<int>(p, "angles_log2") <= 16, "angles_log2 must lie in [1, 16]"},
         {get<int>(p, "s_max") >= 2 && get<int>(p, "s_max") <= 60, "s_max must lie in [2, 60]"},
         {get<int>(p, "steps_per_octave") >= 1 && get<int>(p, "steps_per_octave") <= 64,
          "steps_per_octave must lie in [1, 64]"},
         {get<int>(p, "bound_points") >= 1 && get<int>(p, "bound_points") <= 1'000'000,
          "bound_points must lie in [1, 1e6]"},
         {get<double>(p, "bound_s_max") > get<double>(p, "calibration_s"), "bound_s_max must exceed calibration_s"},
         {get<double>(p, "calibration_s") > 1, "calibration_s must exceed 1"},
         {get<double>(p, "exponent_factor") > 0 && get<double>(p, "exponent_factor") <= 1,
          "exponent_factor must lie in (0, 1]"},
         {get<int>(p, "exclusion_levels") >= 1 && get<int>(p, "exclusion_levels") <= 64,
          "exclusion_levels must lie in [1, 64]"},
         {get<double>(p, "drift_s_min") > 0 && get<double>(p, "drift_s_max") >= get<double>(p, "drift_s_min"),
          "drift range must be positive and nonempty"},
         {get<double>(p, "tol") > 0, "tol must be positive"}});
    v.insert(v.end(), more.begin(), more.end());
    return v;
}

// prop2-hausdorff

void run_prop2(const json& p, const fs::path& out, RunReport& rep)
{
    const int A = get<int>(p, "A");
    const int depth = get<int>(p, "depth");
    const CantorSpec spec = CantorSpec::trigonometric(A, depth);
    const GaugeFunction g = GaugeFunction::log_scale(get<double>(p, "alpha"));
    Csv csv("j,log2_count,log2_length,count_times_length,log10_count_times_gauge");
    json rows = json::array();
    std::vector<double> seq;
    Series s{"log10 N_j lambda(l_j)", {}};
    for (int j = 0; j <= depth; ++j) {
        const BigInt N = spec.count(j);
        const double v = count_times_gauge(spec, g, j);
        seq.push_back(v);
        const double nl = std::exp(log_ratio(N * boost::multiprecision::numerator(spec.length(j)),
                                              boost::multiprecision::denominator(spec.length(j))));
        csv.row(j, log_of(N) / ln2, log_of(spec.length(j)) / ln2, nl, std::log10(v));
        rows.push_back({{"j", j}, {"count_times_length", nl}, {"count_times_gauge", v}});
        s.points.emplace_back(j, std::log10(v));
    }
    bool increasing = true;
    for (int j = 2; j <= depth; ++j)
        increasing = increasing && seq[j] > seq[j - 1];
    rep.checks.push_back({"trig-cantor-hausdorff-divergence", increasing,
                          {{"sequence", std::vector<double>(seq.begin() + 1, seq.end())}}});
    const HausdorffBounds hb = hausdorff_bounds(spec, g, depth);
    rep.results["sequence"] = rows;
    rep.results["bounds"] = {{"upper", hb.upper}, {"lower", hb.lower}, {"a", hb.a}};
    emit(rep, out, "profile_sequence.csv", csv.str());
    emit(rep, out, "plot_sequence.svg",
         svg_plot("Trigonometric Cantor set, lambda(t) = t |log t|^alpha", "generation j", "log10 N_j lambda(l_j)", {s}));
}

std::vector<std::string> validate_prop2(const json& p)
{
    const int A = get<int>(p, "A");
    const int depth = get<int>(p, "depth");
    const double alpha = get<double>(p, "alpha");
    const double bits = depth * std::log2(std::max(A, 2));
    return require({{A >= 2, "A must be >= 2"},
                    {depth >= 2, "depth must be >= 2"},
                    {bits <= 24, "A^depth exceeds the 2^24-bit exponent budget"},
                    {alpha > 0, "alpha must be positive"},
                    {std::pow(double(A), alpha) > 4, "A^alpha must exceed 4 (the inverse of the count constant 1/4)"}});
}

// prop3-witness

SpiralFitOptions fit_options(const json& f)
{
    SpiralFitOptions o;
    o.degree = get<int>(f, "degree");
    o.turns = get<double>(f, "turns");
    o.r_start = get<double>(f, "r_start");
    o.r_end = get<double>(f, "r_end");
    o.target = get<double>(f, "target");
    o.oversample = get<int>(f, "oversample");
    o.ridge = get<double>(f, "ridge");
    o.basis_radius = get<double>(f, "basis_radius");
    return o;
}

void run_prop3(const json& p, const fs::path& out, RunReport& rep)
{
    const int A = get<int>(p, "A");
    const LacunaryParams lp(A);
    const double tol = get<double>(p, "tol");
    const SpiralFitOptions fo = fit_options(p.at("fit"));
    SpiralDiagnostics fit;
    SpiralH h;
    try {
        h = spiral_h_fit(fo, &fit);
    } catch (const FitFailure& e) {
        rep.checks.push_back({"spiral-h-grid", false, {{"error", e.what()}}});
        return;
    }
    emit(rep, out, "spiral_h.json", h.to_json().dump(1) + "\n");
    const int vg = get<int>(p, "verify_grid");
    const SpiralDiagnostics grid = h.verify(vg, vg, fo);
    rep.checks.push_back({"spiral-h-grid", grid.max_ratio <= h.B() && grid.annulus_min >= 1,
                          {{"B", h.B()},
                           {"max_ratio", grid.max_ratio},
                           {"annulus_min", grid.annulus_min},
                           {"spiral_min", fit.spiral_min},
                           {"grid", vg}}});

    const int n_angles = get<int>(p, "angles");
    const int N_max = get<int>(p, "N_max");
    const double factor = get<double>(p, "witness_factor");
    Csv csv("theta,N,scale,u,u_over_A_pow");
    int below = 0, outside = 0, total = 0;
    double worst = INFINITY;
    for (int j = 0; j < n_angles; ++j)
        for (int N = 0; N <= N_max; ++N) {
            const AngleFraction th(j, n_angles);
            const RadialPoint w = proposition3_witness(th, N, lp, h);
            const double u = proposition3_eval(w, lp, h, tol);
            const double ratio = u / std::pow(double(A), N + 1);
            const double lo = std::pow(double(A), N), hi = std::pow(double(A), N + 1);
            outside += !(w.scale() >= lo && w.scale() < hi);
            worst = std::min(worst, ratio);
            below += ratio < factor;
            ++total;
            csv.row(th.str(), N, w.scale(), u, ratio);
        }
    rep.checks.push_back({"spiral-h-witness", below == 0,
                          {{"witnesses", total}, {"below", below}, {"min_ratio", worst}, {"required", factor}}});
    rep.checks.push_back({"witness-scale-window", outside == 0, {{"outside", outside}}});
    emit(rep, out, "profile_witness.csv", csv.str());

    {
        const double K = 2 / (1 - lacunary_delta(A)) * A * h.B() / ln2;
        std::mt19937_64 rng(get<std::uint64_t>(p, "seed"));
        std::uniform_real_distribution<double> S(0.0, get<double>(p, "bound_s_max"));
        std::uniform_int_distribution<std::uint64_t> J(0, (std::uint64_t(1) << 62) - 1);
        int violations = 0;
        for (int i = 0; i < get<int>(p, "bound_points"); ++i) {
            const double s = S(rng);
            if (!(s > 0))
                continue;
            const RadialPoint z = RadialPoint::from_scale(s, AngleFraction::dyadic(BigInt(J(rng)), 62));
            violations += std::abs(proposition3_eval(z, lp, h, tol)) > K * s * ln2;
        }
        rep.checks.push_back({"proposition3-bound", violations == 0, {{"constant", K}, {"violations", violations}}});
    }

    Series s{"max over 1/6 < r < 1/3", {}};
    for (int i = 0; i < 256; ++i)
        s.points.emplace_back(double(i) / 256, h.annulus_max(AngleFraction(i, 256)).second);
    emit(rep, out, "plot_annulus.svg", svg_plot("Spiral h: annulus maxima", "theta / 2 pi", "max h", {s}));
}

std::vector<std::string> validate_prop3(const json& p)
{
    const json& f = p.at("fit");
    return require({{get<int>(p, "A") >= 2 && get<int>(p, "A") <= 64, "A must lie in [2, 64]"},
                    {get<int>(p, "N_max") >= 0 && get<int>(p, "N_max") <= 4, "N_max must lie in [0, 4]"},
                    {get<int>(p, "angles") >= 1 && get<int>(p, "angles") <= 4096, "angles must lie in [1, 4096]"},
                    {get<int>(p, "verify_grid") >= 8 && get<int>(p, "verify_grid") <= 2048,
                     "verify_grid must lie in [8, 2048]"},
                    {get<int>(f, "degree") >= 8 && get<int>(f, "degree") <= 160, "fit.degree must lie in [8, 160]"},
                    {get<double>(f, "r_start") > 1.0 / 6 && get<double>(f, "r_end") < 1.0 / 3 &&
                         get<double>(f, "r_start") < get<double>(f, "r_end"),
                     "fit spiral must run inside 1/6 < r < 1/3"},
                    {get<double>(f, "turns") >= 1, "fit.turns must be >= 1 so the spiral meets every ray"},
                    {get<int>(f, "oversample") >= 1, "fit.oversample must be >= 1"},
                    {get<double>(f, "ridge") >= 0, "fit.ridge must be >= 0"},
                    {get<double>(f, "basis_radius") > 0, "fit.basis_radius must be positive"},
                    {get<double>(p, "tol") > 0, "tol must be positive"},
                    {get<int>(p, "bound_points") >= 0, "bound_points must be >= 0"}});
}

// measure-growth

void run_measures(const json& p, const fs::path& out, RunReport& rep)
{
    const int k_max = get<int>(p, "k_max");
    const int cal = get<int>(p, "calibration_k");
    const double tol = get<double>(p, "tol");
    const auto family = dyadic_arcs(get<int>(p, "carleson_depth_min"), get<int>(p, "carleson_depth_max"));
    std::vector<double> ratio(k_max + 1), growth(k_max + 1);
    bool mass_ok = true;
    parallel_for(std::size_t(k_max), [&](std::size_t i) {
        const int k = int(i) + 1;
        const ArcMeasure mu = build_mu_k(k);
        ratio[k] = carleson_log_ratio(mu, family);
        const int e = 1 << k;
        growth[k] = mu.poisson_integral(RadialPoint::from_scale(e, AngleFraction::dyadic(1, unsigned(e + 1))), tol) /
                    std::exp2(k);
    });
    for (int k = 1; k <= k_max; ++k)
        mass_ok = mass_ok && build_mu_k(k).absolutely_continuous_mass_over_2pi() == 1;
    rep.checks.push_back({"mu-k-mass", mass_ok, {{"k_max", k_max}}});
    const double bound = get<double>(p, "carleson_bound");
    const double worst = *std::max_element(ratio.begin() + 1, ratio.end());
    rep.checks.push_back({"carleson-log-ratio", worst <= bound, {{"max_ratio", worst}, {"bound", bound}}});
    const double c1 = growth[cal];
    const double fac = get<double>(p, "stability_factor");
    bool stable = c1 > 0;
    for (int k = cal + 1; k <= k_max; ++k)
        stable = stable && growth[k] >= c1 / fac && growth[k] <= fac * c1;
    rep.checks.push_back({"poisson-growth-stability", stable,
                          {{"c1", c1}, {"values", std::vector<double>(growth.begin() + 1, growth.end())}}});

    json fam = json::array();
    bool n_mass = true;
    for (int n : p.at("n_values")) {
        const ArcMeasure mu = build_mu_n_k(n, get<int>(p, "n_k"));
        n_mass = n_mass && mu.absolutely_continuous_mass_over_2pi() == Rational(1, BigInt(1) << n);
        fam.push_back({{"n", n}, {"carleson_ratio_times_2n", carleson_log_ratio(mu, family) * std::exp2(n)}});
    }
    rep.checks.push_back({"mu-n-mass", n_mass, {{"n_values", p.at("n_values")}}});
    rep.results["mu_n_family"] = fam;

    {
        const int e = 1 << cal;
        const ArcMeasure mu = build_mu_k(cal);
        std::vector<Rational> widths;
        for (int j = 0; j <= 8; ++j)
            widths.push_back(Rational(1, BigInt(1) << (e + j)));
        const auto hits = concentration_detect(mu, AngleFraction::dyadic(1, unsigned(e + 1)), widths,
                                               get<double>(p, "kappa"));
        json hs = json::array();
        for (const auto& h : hits)
            hs.push_back(rational_str(h));
        rep.results["concentration"] = {{"k", cal}, {"kappa", get<double>(p, "kappa")}, {"half_widths", hs}};
    }

    Csv csv("k,v_over_2k,carleson_ratio");
    Series s{"v / 2^k", {}};
    for (int k = 1; k <= k_max; ++k) {
        csv.row(k, growth[k], ratio[k]);
        s.points.emplace_back(k, growth[k]);
    }
    emit(rep, out, "profile_measure_growth.csv", csv.str());
    emit(rep, out, "plot_measure_growth.svg",
         svg_plot("Poisson integral of mu_k at an arc center, 1 - r = 2^-2^k", "k", "v / 2^k", {s}));
}

std::vector<std::string> validate_measures(const json& p)
{
    auto v = require({{get<int>(p, "k_max") >= 1 && get<int>(p, "k_max") <= 10, "k_max must lie in [1, 10]"},
                      {get<int>(p, "calibration_k") >= 1 && get<int>(p, "calibration_k") <= get<int>(p, "k_max"),
                       "calibration_k must lie in [1, k_max]"},
                      {get<int>(p, "carleson_depth_min") >= 2, "carleson_depth_min must be >= 2 (|J| < e)"},
                      {get<int>(p, "carleson_depth_max") >= get<int>(p, "carleson_depth_min") &&
                           get<int>(p, "carleson_depth_max") <= 20,
                       "carleson_depth_max must lie in [carleson_depth_min, 20]"},
                      {get<double>(p, "stability_factor") >= 1, "stability_factor must be >= 1"},
                      {get<double>(p, "tol") > 0, "tol must be positive"},
                      {get<double>(p, "kappa") > 0, "kappa must be positive"},
                      {get<int>(p, "n_k") >= 1 && get<int>(p, "n_k") <= 8, "n_k must lie in [1, 8]"}});
    for (int n : p.at("n_values"))
        if (n < 1 || n > 16)
            v.push_back("n_values must lie in [1, 16]");
    return v;
}

// cantor-bounds

CantorSpec spec_from(const json& p)
{
    const json& s = p.at("spec");
    if (s.is_string()) {
        if (s.get<std::string>() != "middle-thirds")
            throw DomainError("unknown spec name '" + s.get<std::string>() + "'");
        return CantorSpec::middle_thirds(get<int>(p, "depth"));
    }
    return CantorSpec::from_json(s);
}

void run_cantor(const json& p, const fs::path& out, RunReport& rep)
{
    const CantorSpec spec = spec_from(p);
    const GaugeFunction g = GaugeFunction::from_json(p.at("gauge"));
    const int depth = spec.depth();
    const double tol = get<double>(p, "tol");
    const HausdorffBounds hb = hausdorff_bounds(spec, g, depth);
    const double a = hb.a;
    const double a_grid = gauge_condition_constant(spec, g, 0, depth - 1, false);
    const std::size_t budget = get<std::size_t>(p, "dp_budget");
    const int dp_max = std::min(get<int>(p, "dp_generation_max"), depth);
    std::vector<double> dp(depth + 1, NAN);
    bool sandwich = true;
    for (int s = 0; s <= dp_max; ++s) {
        if (spec.count(s) > budget)
            break;
        dp[s] = optimal_cover_cost(generation(spec, s), g, budget);
        sandwich = sandwich && dp[s] >= hb.lower - tol && dp[s] <= hb.upper + tol;
    }
    rep.checks.push_back({"cantor-sandwich", sandwich,
                          {{"upper", hb.upper}, {"lower", hb.lower}, {"a", a}, {"a_grid", a_grid}}});
    if (p.at("spec").is_string()) {
        double seq_err = 0;
        for (double v : hb.sequence)
            seq_err = std::max(seq_err, std::abs(v - 1));
        const double dp8 = depth >= 8 ? dp[8] : NAN;
        const bool ok = seq_err <= 1e-12 && std::abs(a - 2.0 / 3) <= 1e-9 && std::abs(a_grid - 2.0 / 3) <= 1e-9 &&
                        dp8 >= 1.0 / 3 - 1e-9 && dp8 <= 1 + 1e-9;
        rep.checks.push_back({"middle-thirds-sandwich", ok,
                              {{"max_sequence_error", seq_err}, {"a", a}, {"a_grid", a_grid}, {"dp_generation_8", dp8}}});
    }
    Csv csv("s,count_times_gauge,optimal_cover_cost");
    Series sq{"N_s lambda(l_s)", {}}, sd{"optimal cover cost", {}};
    for (int s = 0; s <= depth; ++s) {
        csv.row(s, hb.sequence[s], dp[s]);
        sq.points.emplace_back(s, hb.sequence[s]);
        if (std::isfinite(dp[s]))
            sd.points.emplace_back(s, dp[s]);
    }
    Series lo{"lower bound", {{0, hb.lower}, {depth, hb.lower}}};
    emit(rep, out, "profile_sequence.csv", csv.str());
    emit(rep, out, "plot_sequence.svg", svg_plot("Hausdorff bounds", "generation s", "cost", {sq, sd, lo}));
    if (dp_max >= 0 && spec.count(dp_max) <= budget)
        emit(rep, out, "generation_" + std::to_string(dp_max) + ".csv", generation(spec, dp_max).to_csv());
}

std::vector<std::string> validate_cantor(const json& p)
{
    std::vector<std::string> v;
    const json& s = p.at("spec");
    try {
        if (s.is_string()) {
            if (s.get<std::string>() != "middle-thirds")
                v.push_back("spec must be \"middle-thirds\" or a spec object");
            else if (get<int>(p, "depth") < 2 || get<int>(p, "depth") > 40)
                v.push_back("depth must lie in [2, 40]");
        } else if (s.is_object()) {
            const auto pl = s.value("placement", std::string());
            if (pl == "uniform" || pl == "alternating") {
                std::vector<Interval> roots;
                for (const auto& r : s.at("roots"))
                    roots.push_back({parse_rational(r.at(0).get<std::string>()), parse_rational(r.at(1).get<std::string>())});
                std::vector<Rational> lengths;
                for (const auto& l : s.at("lengths"))
                    lengths.push_back(parse_rational(l.get<std::string>()));
                std::vector<BigInt> ks;
                for (const auto& k : s.at("children"))
                    ks.push_back(BigInt(k.is_string() ? k.get<std::string>() : std::to_string(k.get<long long>())));
                v = CantorSpec::violations(roots, lengths, ks);
            } else {
                CantorSpec::from_json(s);
            }
        } else {
            v.push_back("spec must be a string or an object");
        }
    } catch (const std::exception& e) {
        v.push_back(std::string("spec: ") + e.what());
    }
    try {
        GaugeFunction::from_json(p.at("gauge"));
    } catch (const std::exception& e) {
        v.push_back(std::string("gauge: ") + e.what());
    }
    auto more = require({{get<double>(p, "tol") >= 0, "tol must be >= 0"},
                         {get<int>(p, "dp_budget") >= 1 && get<int>(p, "dp_budget") <= 10'000,
                          "dp_budget must lie in [1, 1e4]"}});
    v.insert(v.end(), more.begin(), more.end());
    return v;
}

// propagation-check

void run_propagation(const json& p, const fs::path& out, RunReport& rep)
{
    const int A = get<int>(p, "A");
    const LacunaryParams lp(A);
    const double tol = get<double>(p, "tol");
    const AngleFraction th = parse_angle(get<std::string>(p, "theta"));
    const double sigma = get<double>(p, "sigma");
    std::vector<double> scales;
    for (int s = get<int>(p, "s_min"); s <= get<int>(p, "s_max"); ++s)
        scales.push_back(s);
    const auto ratios = quarter_octave_ratios(get<int>(p, "ratio_quarter_min"), get<int>(p, "ratio_quarter_max"));
    const double max_spread = get<double>(p, "max_spread");
    const Evaluator u = [&](const RadialPoint& z) { return lacunary_eval(z, lp, tol); };
    // log |1 / exp(G)| for the lacunary analytic G: zero-free, equal to -u
    const Evaluator v = [&](const RadialPoint& z) { return -lacunary_eval(z, lp, tol); };

    auto summarize = [&](const PropagationResult& r) {
        json j{{"premise_scales", std::count_if(r.scales.begin(), r.scales.end(),
                                                [](const PropagationScale& x) { return x.premise; })}};
        j["tau1"] = r.tau1 ? json(*r.tau1) : json(nullptr);
        j["max_best_ratio"] = r.max_best_ratio;
        j["spread"] = r.tau1 && *r.tau1 > 0 ? json(r.max_best_ratio / *r.tau1) : json(nullptr);
        return j;
    };
    auto ok = [&](const PropagationResult& r) {
        return r.tau1 && *r.tau1 > 0 && r.max_best_ratio / *r.tau1 < max_spread;
    };
    const PropagationResult g = nontangential_propagation_check(u, th, sigma, scales, ratios);
    const PropagationResult d = nontangential_propagation_check(v, th, sigma, scales, ratios, PropagationMode::Decay);
    rep.checks.push_back({"nontangential-propagation", ok(g), summarize(g)});
    rep.checks.push_back({"nontangential-propagation-decay", ok(d), summarize(d)});

    const double C = lacunary_constant(A);
    const GrowthProfile pr = profile(u, th, scales);
    bool under = true;
    for (const auto& smp : pr.samples)
        under = under && smp.quotient <= C * (1 + 1 / (smp.s * ln2));
    rep.checks.push_back({"class-k-majorant", under, {{"C", C}}});

    Csv csv("s,quotient,premise,best_ratio,decay_best_ratio");
    Series sg{"growth", {}}, sdc{"decay", {}};
    for (std::size_t i = 0; i < scales.size(); ++i) {
        csv.row(scales[i], pr.samples[i].quotient, int(g.scales[i].premise), g.scales[i].best_ratio,
                d.scales[i].best_ratio);
        if (g.scales[i].premise)
            sg.points.emplace_back(scales[i], g.scales[i].best_ratio);
        if (d.scales[i].premise)
            sdc.points.emplace_back(scales[i], d.scales[i].best_ratio);
    }
    emit(rep, out, "profile_propagation.csv", csv.str());
    emit(rep, out, "plot_propagation.svg",
         svg_plot("Largest passing shift ratio per scale", "s = -log2(1 - r)", "delta / (1 - r)", {sg, sdc}));
}

std::vector<std::string> validate_propagation(const json& p)
{
    std::vector<std::string> v;
    try {
        parse_angle(get<std::string>(p, "theta"));
    } catch (const std::exception& e) {
        v.push_back(std::string("theta: ") + e.what());
    }
    auto more = require({{get<int>(p, "A") >= 2 && get<int>(p, "A") <= 64, "A must lie in [2, 64]"},
                         {get<double>(p, "sigma") > 0, "sigma must be positive"},
                         {get<int>(p, "s_min") >= 1 && get<int>(p, "s_max") >= get<int>(p, "s_min") &&
                              get<int>(p, "s_max") <= 1000,
                          "need 1 <= s_min <= s_max <= 1000"},
                         {get<int>(p, "ratio_quarter_min") <= get<int>(p, "ratio_quarter_max"),
                          "ratio_quarter_min must not exceed ratio_quarter_max"},
                         {get<double>(p, "max_spread") >= 1, "max_spread must be >= 1"},
                         {get<double>(p, "tol") > 0, "tol must be positive"}});
    v.insert(v.end(), more.begin(), more.end());
    return v;
}

// config plumbing

void merge(json& base, const json& user, const std::string& path, std::vector<std::string>& errs)
{
    static const std::set<std::string> replace_whole{"params.spec", "params.gauge"};
    for (const auto& [k, val] : user.items()) {
        const std::string key = path + "." + k;
        if (!base.contains(k)) {
            errs.push_back("unknown parameter " + key);
            continue;
        }
        json& b = base[k];
        if (replace_whole.count(key)) {
            b = val;
        } else if (b.is_object()) {
            if (!val.is_object())
                errs.push_back(key + " must be an object");
            else
                merge(b, val, key, errs);
        } else if (b.is_number_integer() || b.is_number_unsigned()) {
            if (!val.is_number_integer() && !val.is_number_unsigned())
                errs.push_back(key + " must be an integer");
            else
                b = val;
        } else if (b.is_number()) {
            if (!val.is_number())
                errs.push_back(key + " must be a number");
            else
                b = val;
        } else if (b.type() != val.type()) {
            errs.push_back(key + " has the wrong type");
        } else {
            b = val;
        }
    }
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> v)
    : std::runtime_error("invalid config: " + join(v)), violations(std::move(v))
{
}

const std::vector<Experiment>& experiments()
{
    static const std::vector<Experiment> list{
        {"poisson-checks",
         "Poisson kernel normalization, Harnack shift inequality, kernel shape",
         {{"scales", {0, 1, 10, 20}},
          {"normalization_tol", 1e-10},
          {"harnack_samples", 100000},
          {"harnack_s_max", 30.0},
          {"kernel_plot_scale", 3.0},
          {"seed", 20240601}},
         validate_poisson,
         run_poisson},
        {"lacunary-growth",
         "Lacunary series: class bound scan and growth on the trigonometric Cantor set",
         {{"A", 4},
          {"tol", 1e-9},
          {"bound_points", 10000},
          {"bound_s_max", 64.0},
          {"s_max", 256},
          {"steps_per_octave", 4},
          {"cantor_generation", 3},
          {"cantor_angles", 32},
          {"off_cantor_angles", 256},
          {"slack", 0.05},
          {"threshold", 0.01},
          {"seed", 11}},
         validate_lacunary,
         run_lacunary},
        {"horowitz-growth",
         "Horowitz product: zero lattice, lower bound off exclusion disks, D+ scan",
         {{"mu", 8.0},
          {"beta", 4},
          {"tol", 1e-12},
          {"zero_levels", 3},
          {"q_bound", 0.9},
          {"bound_points", 1000},
          {"bound_s_max", 20.0},
          {"calibration_s", 10.0},
          {"exponent_factor", 0.9},
          {"q_scan", 0.5},
          {"angles_log2", 12},
          {"s_max", 20},
          {"steps_per_octave", 4},
          {"threshold", 0.01},
          {"dplus_fraction", 0.95},
          {"exclusion_levels", 24},
          {"drift_s_min", 8.0},
          {"drift_s_max", 64.0},
          {"seed", 3}},
         validate_horowitz,
         run_horowitz},
        {"prop2-hausdorff",
         "Trigonometric Cantor set: N_j lambda(l_j) for lambda(t) = t |log t|^alpha",
         {{"A", 32}, {"alpha", 1.0}, {"depth", 4}},
         validate_prop2,
         run_prop2},
        {"prop3-witness",
         "Spiral harmonic h and the composed lacunary function at witness points",
         {{"A", 16},
          {"N_max", 3},
          {"angles", 16},
          {"tol", 1e-6},
          {"witness_factor", 0.4},
          {"verify_grid", 100},
          {"bound_points", 200},
          {"bound_s_max", 64.0},
          {"seed", 5},
          {"fit",
           {{"degree", 64},
            {"turns", 1.0},
            {"r_start", 0.19},
            {"r_end", 0.31},
            {"target", 2.0},
            {"oversample", 8},
            {"ridge", 1e-24},
            {"basis_radius", 0.25}}}},
         validate_prop3,
         run_prop3},
        {"measure-growth",
         "Dyadic Cantor measures: mass, Carleson-log ratio, Poisson-integral growth",
         {{"k_max", 8},
          {"calibration_k", 3},
          {"stability_factor", 2.0},
          {"carleson_depth_min", 2},
          {"carleson_depth_max", 16},
          {"carleson_bound", 6.0},
          {"tol", 1e-7},
          {"kappa", 0.1},
          {"n_values", {1, 2, 3}},
          {"n_k", 3}},
         validate_measures,
         run_measures},
        {"cantor-bounds",
         "Two-sided Hausdorff bounds against the optimal-cover dynamic program",
         {{"spec", "middle-thirds"},
          {"depth", 12},
          {"gauge", {{"kind", "power"}, {"d", std::log(2.0) / std::log(3.0)}}},
          {"dp_generation_max", 8},
          {"dp_budget", 10000},
          {"tol", 1e-9}},
         validate_cantor,
         run_cantor},
        {"propagation-check",
         "Nontangential propagation of growth and decay for the lacunary function",
         {{"A", 4},
          {"theta", "0"},
          {"sigma", 0.04},
          {"s_min", 16},
          {"s_max", 64},
          {"ratio_quarter_min", -32},
          {"ratio_quarter_max", 8},
          {"max_spread", 4.0},
          {"tol", 1e-12}},
         validate_propagation,
         run_propagation},
    };
    return list;
}

namespace {

const Experiment* find(const std::string& id)
{
    for (const auto& e : experiments())
        if (e.id == id)
            return &e;
    return nullptr;
}

}  // namespace

json effective_config(const json& config)
{
    std::vector<std::string> errs;
    if (!config.is_object())
        throw ConfigError({"config must be a JSON object"});
    for (const auto& [k, v] : config.items())
        if (k != "experiment" && k != "output_dir" && k != "params")
            errs.push_back("unknown top-level key " + k);
    if (!config.contains("experiment") || !config["experiment"].is_string())
        throw ConfigError({"missing experiment id"});
    const Experiment* e = find(config["experiment"].get<std::string>());
    if (!e)
        throw ConfigError({"unknown experiment '" + config["experiment"].get<std::string>() + "'"});
    json eff{{"experiment", e->id}, {"output_dir", config.value("output_dir", std::string("out/") + e->id)},
             {"params", e->defaults}};
    if (config.contains("params")) {
        if (!config["params"].is_object())
            errs.push_back("params must be an object");
        else
            merge(eff["params"], config["params"], "params", errs);
    }
    if (!errs.empty())
        throw ConfigError(errs);
    return eff;
}

std::vector<std::string> validate(const json& config)
{
    try {
        const json eff = effective_config(config);
        return find(eff["experiment"].get<std::string>())->validate(eff["params"]);
    } catch (const ConfigError& e) {
        return e.violations;
    } catch (const std::exception& e) {
        return {e.what()};
    }
}

RunReport run(const json& config, const fs::path& out_dir)
{
    const auto violations = validate(config);
    if (!violations.empty())
        throw ConfigError(violations);
    const json eff = effective_config(config);
    const Experiment* e = find(eff["experiment"].get<std::string>());
    const fs::path out = out_dir.empty() ? fs::path(eff["output_dir"].get<std::string>()) : out_dir;
    fs::create_directories(out);
    RunReport rep;
    rep.experiment = e->id;
    rep.config = eff;
    rep.results = json::object();
    e->run(eff["params"], out, rep);
    rep.files.push_back("summary.json");
    write_text(out / "summary.json", rep.to_json().dump(2) + "\n");
    return rep;
}

}  // namespace korenblum::lab
