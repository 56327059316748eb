// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//   acceptance [--only N]... [--lab path/to/korenblum_lab] [--configs dir]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "korenblum/arc_measure.hpp"
#include "korenblum/cantor.hpp"
#include "korenblum/disk.hpp"
#include "korenblum/growth.hpp"
#include "korenblum/horowitz.hpp"
#include "korenblum/lacunary.hpp"
#include "korenblum/spiral.hpp"

namespace fs = std::filesystem;
using namespace korenblum;

namespace {

constexpr double ln2 = std::numbers::ln2;
constexpr double pi = std::numbers::pi;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

struct Context {
    std::string lab;
    std::string configs;
};

// 1. Poisson normalization
Outcome poisson_normalization_check(const Context&)
{
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0;
    for (double d : {1.0, 0.5, std::ldexp(1.0, -10), std::ldexp(1.0, -20)})
        worst = std::max(worst, std::abs(poisson_normalization(d) - 1));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {worst < 1e-10 && secs < 5, fmt("max |int P - 1| = %.2e, %.2f s", worst, secs)};
}

// 2. Harnack shift inequality on random tuples
Outcome harnack_check(const Context&)
{
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    int violations = 0;
    double smallest = INFINITY;
    for (int i = 0; i < 100000; ++i) {
        const double s = 0.05 + 29.95 * U(rng);
        const double d = std::exp2(-s);
        const double r = 1 - d;
        const double tau = 0.01 + 0.98 * U(rng);
        double delta = 0;
        while (!(delta > 0))
            delta = U(rng) * tau * d;
        const double theta = pi * (2 * U(rng) - 1);
        const double margin = harnack_shift_margin(r, tau, delta, std::span(&theta, 1));
        // normalized by the kernel scale so deep and shallow tuples compare
        smallest = std::min(smallest, margin * d);
        if (!(margin > 0))
            ++violations;
    }
    return {violations == 0, fmt("%d violations in 1e5 tuples, min margin*(1-r) = %.3e", violations,
                                 smallest)};
}

// 3. Lacunary bound
Outcome lacunary_bound_check(const Context&)
{
    const auto t0 = std::chrono::steady_clock::now();
    const LacunaryParams params(4);
    const double CA = lacunary_constant(4);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> S(0.0, 64.0);
    std::uniform_int_distribution<std::uint64_t> J(0, (std::uint64_t(1) << 62) - 1);
    int violations = 0;
    double worst = 0;
    for (int i = 0; i < 10000; ++i) {
        const double s = i == 0 ? 0.0 : S(rng);
        const AngleFraction theta = AngleFraction::dyadic(BigInt(J(rng)), 62);
        const RadialPoint p = s == 0 ? RadialPoint() : RadialPoint::from_scale(s, theta);
        const double u = lacunary_eval(p, params, 1e-12);
        const double bound = CA * (1 + s * ln2);
        worst = std::max(worst, std::abs(u) / bound);
        if (std::abs(u) > bound)
            ++violations;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {violations == 0 && secs < 60,
            fmt("C_A = %.4f, %d violations, max |u|/bound = %.4f, %.1f s", CA, violations, worst, secs)};
}

// 4. Lacunary growth on the Cantor set
Outcome lacunary_growth_check(const Context&)
{
    const LacunaryParams params(4);
    const double need = 0.95 / (8 * 4 * ln2);
    const CantorSpec spec = CantorSpec::trigonometric(4, 3);
    std::vector<AngleFraction> angles{AngleFraction()};
    std::mt19937_64 rng(11);
    std::set<Rational> seen;
    while (angles.size() < 33) {
        const Interval I = sample_interval(spec, 3, rng);
        if (!seen.insert(I.center()).second)
            continue;
        Rational c = I.center();
        if (c < 0)
            c += 1;
        angles.push_back(AngleFraction::from_rational(c));
    }
    const std::vector<double> scales = radial_grid(256, 4);
    double worst = INFINITY;
    int failing = 0;
    for (const auto& a : angles) {
        const GrowthProfile p =
            profile([&](const RadialPoint& z) { return lacunary_eval(z, params, 1e-9); }, a, scales);
        const Classification c = classify(p);
        worst = std::min(worst, c.liminf_est);
        if (c.liminf_est < need)
            ++failing;
    }
    return {failing == 0, fmt("min tail liminf proxy %.4f over %zu angles (need >= %.4f), %d below",
                              worst, angles.size(), need, failing)};
}

// 5. Hausdorff divergence for the trig Cantor set
Outcome hausdorff_divergence_check(const Context&)
{
    const CantorSpec spec = CantorSpec::trigonometric(32, 4);
    const GaugeFunction g = GaugeFunction::log_scale(1.0);
    std::vector<double> seq;
    bool increasing = true;
    for (int j = 1; j <= 4; ++j) {
        seq.push_back(count_times_gauge(spec, g, j));
        if (j > 1 && !(seq[j - 1] > seq[j - 2]))
            increasing = false;
    }
    return {increasing, fmt("N_j lambda(l_j) = %.4g, %.4g, %.4g, %.4g", seq[0], seq[1], seq[2], seq[3])};
}

// 6. Hausdorff sandwich for middle thirds
Outcome sandwich_check(const Context&)
{
    const auto t0 = std::chrono::steady_clock::now();
    const CantorSpec spec = CantorSpec::middle_thirds(12);
    const GaugeFunction g = GaugeFunction::power(std::log(2.0) / std::log(3.0));
    double seq_err = 0;
    for (int s = 0; s <= 12; ++s)
        seq_err = std::max(seq_err, std::abs(count_times_gauge(spec, g, s) - 1));
    const double a = gauge_condition_constant(spec, g, 0, 11);
    const double a_grid = gauge_condition_constant(spec, g, 0, 11, false);
    const double dp = optimal_cover_cost(generation(spec, 8), g);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = seq_err <= 1e-12 && std::abs(a - 2.0 / 3) <= 1e-9 &&
                    std::abs(a_grid - 2.0 / 3) <= 1e-9 && dp >= 1.0 / 3 - 1e-9 && dp <= 1 + 1e-9 &&
                    secs < 30;
    return {ok, fmt("max |N_s l_s^d - 1| = %.1e, a = %.12f (grid %.12f), DP(gen 8) = %.9f, %.2f s", seq_err,
                    a, a_grid, dp, secs)};
}

// 7. Horowitz zero lattice and the lower bound off the exclusion disks
Outcome horowitz_lattice_check(const Context&)
{
    const HorowitzParams zp(8, 4);
    int zeros = 0, missed = 0;
    for (int k = 1; k <= 3; ++k)
        for (int j = 0; j < (1 << (2 * k)); ++j) {
            ++zeros;
            if (!horowitz_eval(horowitz_zero(k, j, zp), zp, 1e-12).exact_zero)
                ++missed;
        }

    // Const is calibrated on s <= 10 and then held fixed on 10 < s <= 20.
    const HorowitzParams hp(8, 4, 0.9);
    const double a1 = 0.9 * horowitz_exponent(hp);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> S(1.0, 20.0);
    std::uniform_int_distribution<std::uint64_t> J(0, (std::uint64_t(1) << 52) - 1);
    std::vector<std::pair<double, double>> pts;  // (s, log|f|)
    while (pts.size() < 1000) {
        const double s = S(rng);
        const RadialPoint p = RadialPoint::from_scale(s, AngleFraction::dyadic(BigInt(J(rng)), 52));
        if (in_exclusion_disks(p, hp, 24))
            continue;
        pts.emplace_back(s, horowitz_eval(p, hp, 1e-12).log_modulus);
    }
    double C = -INFINITY;
    for (auto [s, lf] : pts)
        if (s <= 10)
            C = std::max(C, a1 * s * ln2 - lf);
    int below = 0;
    double worst = INFINITY;
    for (auto [s, lf] : pts)
        if (s > 10) {
            const double m = lf - (a1 * s * ln2 - C);
            worst = std::min(worst, m);
            if (m < 0)
                ++below;
        }
    return {missed == 0 && below == 0,
            fmt("%d/%d zeros flagged; a' = %.4f, Const = %.3f from s <= 10, %d of the s > 10 points below, "
                "min margin %.3f",
                zeros - missed, zeros, a1, C, below, worst)};
}

// 8. D+ has nearly full measure for the Horowitz product
Outcome horowitz_dplus_check(const Context&)
{
    const HorowitzParams hp(8, 4, 0.5);
    std::vector<AngleFraction> angles;
    for (int j = 0; j < 4096; ++j)
        angles.push_back(AngleFraction::dyadic(j, 12));
    const std::vector<double> scales = radial_grid(20, 4);
    ProfileOptions opt;
    opt.mode = ProfileMode::LogModulus;
    opt.tolerance = 1e-12;
    opt.skip = [&](const RadialPoint& z) { return in_exclusion_disks(z, hp, 24); };
    const ScanSummary sum = scan_angles(
        [&](const RadialPoint& z) { return horowitz_eval(z, hp, 1e-12).log_modulus; }, angles, scales,
        0.01, opt);
    const double f = sum.fraction(DPlus);
    return {f >= 0.95, fmt("D+ fraction %.4f over 4096 angles (%zu with every tail sample excluded)", f,
                           sum.count_excluded)};
}

// 9. Spiral h and the witness points
Outcome spiral_check(const Context&)
{
    SpiralDiagnostics fit;
    SpiralH h;
    try {
        h = spiral_h_fit({}, &fit);
    } catch (const FitFailure& e) {
        return {false, std::string("fit failed: ") + e.what()};
    }
    const SpiralDiagnostics grid = h.verify(100, 100, SpiralFitOptions{});
    const bool props = grid.max_ratio <= h.B() && grid.annulus_min >= 1;

    const LacunaryParams params(16);
    double worst = INFINITY;
    int below = 0;
    for (int j = 0; j < 16; ++j)
        for (int N = 0; N <= 3; ++N) {
            const RadialPoint w = proposition3_witness(AngleFraction::dyadic(j, 4), N, params, h);
            const double u = proposition3_eval(w, params, h, 1e-6);
            const double ratio = u / std::pow(16.0, N + 1);
            worst = std::min(worst, ratio);
            if (ratio < 0.4)
                ++below;
        }
    return {props && below == 0,
            fmt("B = %.3g, 100x100 grid: max |h|/|z| = %.3g, annulus min %.3f; witnesses: %d of 64 below "
                "0.4 A^(N+1), min u/A^(N+1) = %.3g",
                h.B(), grid.max_ratio, grid.annulus_min, below, worst)};
}

// 10. Dyadic measures
Outcome measures_check(const Context&)
{
    bool mass_ok = true;
    double worst_ratio = 0;
    std::vector<double> c(9, 0.0);
    for (int k = 1; k <= 8; ++k) {
        const ArcMeasure mu = build_mu_k(k);
        if (mu.absolutely_continuous_mass_over_2pi() != 1)
            mass_ok = false;
        worst_ratio = std::max(worst_ratio, carleson_log_ratio(mu, dyadic_arcs(2, 16)));
        const int e = 1 << k;
        const AngleFraction alpha = AngleFraction::dyadic(1, unsigned(e + 1));
        c[k] = mu.poisson_integral(RadialPoint::from_scale(e, alpha)) / std::exp2(k);
    }
    bool stable = c[3] > 0;
    for (int k = 4; k <= 8; ++k)
        stable = stable && c[k] >= c[3] / 2 && c[k] <= 2 * c[3];
    return {mass_ok && worst_ratio <= 6 && stable,
            fmt("mass exact %s; Carleson-log ratio max %.4f; v/2^k: c1 = %.4f, k=4..8: %.4f %.4f %.4f %.4f %.4f",
                mass_ok ? "yes" : "no", worst_ratio, c[3], c[4], c[5], c[6], c[7], c[8])};
}

// 11. Nontangential propagation
Outcome propagation_check(const Context&)
{
    const LacunaryParams params(4);
    std::vector<double> scales;
    for (int s = 16; s <= 64; ++s)
        scales.push_back(s);
    const std::vector<double> ratios = quarter_octave_ratios(-32, 8);
    const PropagationResult r = nontangential_propagation_check(
        [&](const RadialPoint& z) { return lacunary_eval(z, params, 1e-12); }, AngleFraction(), 0.04,
        scales, ratios);
    if (!r.tau1)
        return {false, "premise never held"};
    const double spread = r.max_best_ratio / *r.tau1;
    return {*r.tau1 > 0 && spread < 4,
            fmt("tau1 = %.4f, max best ratio %.4f, spread %.3f", *r.tau1, r.max_best_ratio, spread)};
}

// 12. Determinism: every config twice, outputs byte-identical
std::string digest(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    const std::string s((std::istreambuf_iterator<char>(in)), {});
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return fmt("%016llx", (unsigned long long)h);
}

std::map<std::string, std::string> digests(const fs::path& dir)
{
    std::map<std::string, std::string> out;
    for (const auto& e : fs::recursive_directory_iterator(dir))
        if (e.is_regular_file())
            out[fs::relative(e.path(), dir).string()] = digest(e.path());
    return out;
}

Outcome determinism_check(const Context& ctx)
{
    if (ctx.lab.empty() || ctx.configs.empty())
        return {false, "no --lab / --configs given"};
    std::vector<fs::path> configs;
    for (const auto& e : fs::directory_iterator(ctx.configs))
        if (e.path().extension() == ".json")
            configs.push_back(e.path());
    std::sort(configs.begin(), configs.end());
    const fs::path root = fs::temp_directory_path() / "korenblum_acceptance";
    fs::remove_all(root);
    int mismatched = 0, files = 0, failed_runs = 0;
    std::string bad;
    for (const auto& cfg : configs) {
        std::map<std::string, std::string> runs[2];
        for (int i = 0; i < 2; ++i) {
            const fs::path out = root / cfg.stem() / std::to_string(i);
            fs::create_directories(out);
            const std::string cmd = "\"" + ctx.lab + "\" run \"" + cfg.string() + "\" --output-dir \"" +
                                    out.string() + "\" > \"" + (root / "log.txt").string() + "\" 2>&1";
            if (std::system(cmd.c_str()) != 0)
                ++failed_runs;
            runs[i] = digests(out);
        }
        files += int(runs[0].size());
        if (runs[0] != runs[1] || runs[0].empty()) {
            ++mismatched;
            bad += " " + cfg.stem().string();
        }
    }
    fs::remove_all(root);
    return {!configs.empty() && mismatched == 0,
            fmt("%zu configs run twice, %d files hashed, %d differing%s; %d runs exited nonzero",
                configs.size(), files, mismatched, bad.c_str(), failed_runs)};
}

}  // namespace

int main(int argc, char** argv)
{
    Context ctx;
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--only" && i + 1 < argc)
            only.insert(std::atoi(argv[++i]));
        else if (a == "--lab" && i + 1 < argc)
            ctx.lab = argv[++i];
        else if (a == "--configs" && i + 1 < argc)
            ctx.configs = argv[++i];
    }

    const std::vector<std::pair<const char*, std::function<Outcome(const Context&)>>> criteria{
        {"poisson-normalization", poisson_normalization_check},
        {"harnack-shift", harnack_check},
        {"lacunary-bound", lacunary_bound_check},
        {"lacunary-cantor-growth", lacunary_growth_check},
        {"trig-cantor-hausdorff-divergence", hausdorff_divergence_check},
        {"middle-thirds-sandwich", sandwich_check},
        {"horowitz-zeros-and-lower-bound", horowitz_lattice_check},
        {"horowitz-dplus-fraction", horowitz_dplus_check},
        {"spiral-h-and-witnesses", spiral_check},
        {"dyadic-measures", measures_check},
        {"nontangential-propagation", propagation_check},
        {"determinism", determinism_check},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = int(i) + 1;
        if (!only.empty() && !only.count(id))
            continue;
        Outcome o;
        try {
            o = criteria[i].second(ctx);
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
