#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "korenblum/gauge.hpp"

namespace korenblum {

// Closed interval with exact endpoints, in fractions of a full turn (or of [0, 1]).
struct Interval {
    Rational lo;
    Rational hi;
    Rational length() const { return hi - lo; }
    Rational center() const { return (lo + hi) / 2; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool operator==(const Interval&) const = default;
};

enum class Placement {
    Uniform,      // first child flush left, last flush right, equal gaps
    Alternating,  // parent cut into 2 k_s equal parts, every second kept
    Explicit,     // caller-given child offsets
    Trigonometric // {frac(2^(A^s) x) in [-1/8, 1/8]} intersected over levels
};

// Nested family: generation 0 is `roots` (N_0 = roots.size()), each generation-s
// interval of length l_s holds k_s children of length l_{s+1}.
class CantorSpec {
public:
    static CantorSpec middle_thirds(int depth);
    static CantorSpec uniform(std::vector<Interval> roots, std::vector<Rational> lengths,
                              std::vector<BigInt> children);
    static CantorSpec alternating(std::vector<Interval> roots, std::vector<Rational> lengths,
                                  std::vector<BigInt> children);
    static CantorSpec explicit_offsets(std::vector<Interval> roots, std::vector<Rational> lengths,
                                       std::vector<std::vector<Rational>> offsets);
    // C_j = {x : frac(2^(A^k) x) in [-1/8, 1/8] for k <= j}; x in [-1/4, 3/4)
    static CantorSpec trigonometric(int A, int depth);
    // C_1 = two opposite quarters; each arc of C_k cut into 2^(2^k) parts, every second kept
    static CantorSpec dyadic_comb(int depth);

    // Spacing / monotonicity problems, empty when valid.
    static std::vector<std::string> violations(const std::vector<Interval>& roots,
                                               const std::vector<Rational>& lengths,
                                               const std::vector<BigInt>& children);

    int depth() const { return int(lengths_.size()) - 1; }
    Placement placement() const { return placement_; }
    int A() const { return A_; }
    const std::vector<Interval>& roots() const { return roots_; }
    const std::vector<Rational>& lengths() const { return lengths_; }
    const std::vector<BigInt>& children() const { return children_; }
    const Rational& length(int s) const;
    // N_s = N_0 k_0 ... k_{s-1}
    BigInt count(int s) const;

    // Start of the i-th child (0 <= i < k_s) of a generation-s interval.
    Rational child_start(int s, const Interval& parent, const BigInt& i) const;
    std::vector<Interval> children_of(int s, const Interval& parent) const;

    nlohmann::json to_json() const;
    static CantorSpec from_json(const nlohmann::json& j);

private:
    void check() const;

    Placement placement_ = Placement::Uniform;
    int A_ = 0;
    std::vector<Interval> roots_;
    std::vector<Rational> lengths_;
    std::vector<BigInt> children_;
    std::vector<std::vector<Rational>> offsets_;
};

struct Generation {
    int s = 0;
    std::vector<Interval> intervals;
    std::string to_csv() const;
};

Generation generation(const CantorSpec& spec, int s, std::uint64_t budget = 10'000'000);

// A generation-s interval reached by choosing a uniform child at every level.
Interval sample_interval(const CantorSpec& spec, int s, std::mt19937_64& rng);

// Largest a <= 1 with lambda(l)/l >= a lambda(l_{s+1})/l_{s+1} on [l_{s+1}, l_s)
// for s_lo <= s <= s_hi. Power and log-scale gauges use the monotone closed
// form unless use_shortcuts is false, in which case a log-spaced grid is scanned.
double gauge_condition_constant(const CantorSpec& spec, const GaugeFunction& gauge, int s_lo,
                                int s_hi, bool use_shortcuts = true, int grid = 64);

// N_s lambda(l_s), computed in log space from the exact product N_s l_s.
double count_times_gauge(const CantorSpec& spec, const GaugeFunction& gauge, int s);

struct HausdorffBounds {
    double upper = 0;  // min of N_s lambda(l_s) over s in [ceil(s_max/2), s_max]
    double lower = 0;  // (a / 2) upper
    double a = 0;
    std::vector<double> sequence;  // N_s lambda(l_s), s = 0 .. s_max
};

HausdorffBounds hausdorff_bounds(const CantorSpec& spec, const GaugeFunction& gauge, int s_max);

// Min over partitions of the sorted atoms into consecutive groups of the sum
// of lambda(hull length).
double optimal_cover_cost(const Generation& gen, const GaugeFunction& gauge,
                          std::size_t budget = 10'000);

std::string rational_str(const Rational& q);
Rational parse_rational(const std::string& s);

}  // namespace korenblum
