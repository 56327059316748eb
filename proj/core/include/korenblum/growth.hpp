#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "korenblum/radial_point.hpp"

namespace korenblum {

using Evaluator = std::function<double(const RadialPoint&)>;
// true when the sample at this point should be skipped (e.g. inside an exclusion disk)
using SamplePredicate = std::function<bool(const RadialPoint&)>;

enum class ProfileMode {
    HarmonicValue,  // u(z)
    LogModulus      // log |f(z)|, -inf at zeros
};

struct GrowthSample {
    double s;
    double quotient;  // value / (s log 2)
};

struct GrowthProfile {
    AngleFraction theta;
    std::vector<GrowthSample> samples;
    std::size_t tail_window = 0;  // deepest samples used for liminf / limsup
    bool has_zero = false;        // some log-modulus sample was -inf
    std::size_t skipped = 0;      // samples removed by the skip predicate
    double tolerance = 0;         // evaluator absolute tolerance

    std::string to_csv() const;
};

struct ProfileOptions {
    ProfileMode mode = ProfileMode::HarmonicValue;
    double zero_quotient = -10.0;  // -10 C, substituted at zeros
    double tolerance = 0.0;
    SamplePredicate skip;
};

GrowthProfile profile(const Evaluator& f, const AngleFraction& theta, std::span<const double> scales,
                      const ProfileOptions& options = {});

enum Label : unsigned { DPlus = 1, DMinus = 2, GPlus = 4, Neutral = 8 };

struct Classification {
    double liminf_est = 0;
    double limsup_est = 0;
    unsigned labels = 0;
    bool indeterminate = false;  // a tail margin is below 10x the quotient tolerance
    bool has(Label l) const { return labels & l; }
    std::string label_string() const;
};

Classification classify(const GrowthProfile& p, double threshold = 0.01);

struct AngleResult {
    AngleFraction theta;
    Classification cls;
    bool excluded = false;  // every tail sample skipped
};

struct ScanSummary {
    std::vector<AngleResult> angles;
    std::size_t count_dplus = 0, count_dminus = 0, count_gplus = 0, count_neutral = 0;
    std::size_t count_excluded = 0;
    double fraction(Label l) const;  // over all scanned angles
    nlohmann::json to_json() const;
};

ScanSummary scan_angles(const Evaluator& f, const std::vector<AngleFraction>& angles,
                        std::span<const double> scales, double threshold,
                        const ProfileOptions& options = {}, unsigned threads = 0);

struct PropagationScale {
    double s;
    bool premise = false;
    double best_ratio = 0;  // largest tested delta / (1 - r) with every smaller ratio passing
};

struct PropagationResult {
    std::vector<PropagationScale> scales;
    std::optional<double> tau1;  // min of best_ratio over premise scales; empty if vacuous
    double max_best_ratio = 0;
};

enum class PropagationMode {
    Growth,  // premise u > sigma log(e/(1-r)), conclusion u > sigma/2 log(e/(1-r))
    Decay    // premise v < -sigma log(e/(1-r)), conclusion v < -sigma/2 log(e/(1-r))
};

// Shifts delta = ratio (1 - r) radians, both signs, rounded to dyadic turn fractions.
PropagationResult nontangential_propagation_check(const Evaluator& f, const AngleFraction& theta,
                                                  double sigma, std::span<const double> scales,
                                                  std::span<const double> ratios,
                                                  PropagationMode mode = PropagationMode::Growth);

// 2^(j/4) for j = lo .. hi
std::vector<double> quarter_octave_ratios(int lo, int hi);

}  // namespace korenblum
