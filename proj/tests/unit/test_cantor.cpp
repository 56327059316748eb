#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "korenblum/cantor.hpp"

using namespace korenblum;

namespace {

Interval iv(Rational lo, Rational hi) { return {lo, hi}; }

double frac_centered(const Rational& x)
{
    namespace mp = boost::multiprecision;
    BigInt r = mp::numerator(x) % mp::denominator(x);
    if (r < 0)
        r += mp::denominator(x);
    const double d = to_double(Rational(r, mp::denominator(x)));
    return d >= 0.5 ? d - 1 : d;
}

}  // namespace

TEST_SUITE("cantor") {

TEST_CASE("middle thirds generation 2")
{
    const auto gen = generation(CantorSpec::middle_thirds(4), 2);
    REQUIRE(gen.intervals.size() == 4);
    CHECK(gen.intervals[0] == iv(0, Rational(1, 9)));
    CHECK(gen.intervals[1] == iv(Rational(2, 9), Rational(1, 3)));
    CHECK(gen.intervals[2] == iv(Rational(2, 3), Rational(7, 9)));
    CHECK(gen.intervals[3] == iv(Rational(8, 9), 1));
}

TEST_CASE("generations nest")
{
    for (const auto& spec : {CantorSpec::middle_thirds(5), CantorSpec::dyadic_comb(2), CantorSpec::trigonometric(2, 2)}) {
        for (int s = 0; s < spec.depth(); ++s) {
            const auto parents = generation(spec, s).intervals;
            const auto kids = generation(spec, s + 1).intervals;
            CHECK(BigInt(kids.size()) == spec.count(s + 1));
            for (const auto& k : kids) {
                CHECK(k.length() == spec.length(s + 1));
                bool inside = false;
                for (const auto& p : parents)
                    inside = inside || p.contains(k);
                CHECK(inside);
            }
        }
    }
}

TEST_CASE("trigonometric construction")
{
    const auto g0 = generation(CantorSpec::trigonometric(2, 0), 0);
    REQUIRE(g0.intervals.size() == 2);
    for (const auto& i : g0.intervals)
        CHECK(i.length() == Rational(1, 8));

    // every level-k condition |frac(2^(A^k) x)| <= 1/8 holds on every interval of the last generation
    const int A = 2, depth = 2;
    const auto spec = CantorSpec::trigonometric(A, depth);
    const auto gen = generation(spec, depth);
    for (const auto& i : gen.intervals) {
        BigInt M = 2;  // 2^(A^k)
        for (int k = 0; k <= depth; ++k) {
            CHECK(Rational(M) * i.length() <= Rational(1, 4));
            CHECK(std::abs(frac_centered(Rational(M) * i.lo)) <= 0.125 + 1e-15);
            CHECK(std::abs(frac_centered(Rational(M) * i.hi)) <= 0.125 + 1e-15);
            M = M * M;  // A = 2
        }
    }
}

TEST_CASE("dyadic comb generation 2")
{
    const auto gen = generation(CantorSpec::dyadic_comb(2), 2);
    CHECK(gen.intervals.size() == 32);
    for (const auto& i : gen.intervals)
        CHECK(i.length() == Rational(1, 256));
}

TEST_CASE("spacing violations")
{
    CHECK(CantorSpec::violations({iv(0, 1)}, {1, Rational(1, 3)}, {2}).empty());
    CHECK_FALSE(CantorSpec::violations({iv(0, 1)}, {1, Rational(1, 2)}, {3}).empty());
    CHECK_FALSE(CantorSpec::violations({iv(0, 1)}, {1, Rational(1, 3)}, {2, 2}).empty());
    CHECK_THROWS_AS(CantorSpec::uniform({iv(0, 1)}, {1, Rational(1, 2)}, {3}), DomainError);
}

TEST_CASE("json round trip")
{
    for (const auto& spec : {CantorSpec::middle_thirds(6), CantorSpec::trigonometric(4, 3), CantorSpec::dyadic_comb(3)}) {
        const CantorSpec back = CantorSpec::from_json(spec.to_json());
        CHECK(back.lengths() == spec.lengths());
        CHECK(back.children() == spec.children());
        CHECK(back.roots() == spec.roots());
        CHECK(back.placement() == spec.placement());
        CHECK(back.to_json() == spec.to_json());
    }
    CHECK(parse_rational(rational_str(Rational(-7, 12))) == Rational(-7, 12));
}

TEST_CASE("gauge condition constant")
{
    const double d = std::log(2.0) / std::log(3.0);
    const auto spec = CantorSpec::middle_thirds(10);
    const auto g = GaugeFunction::power(d);
    // lambda(l) / l = l^(d - 1) falls by 3^(d - 1) = 2/3 across each generation
    CHECK(gauge_condition_constant(spec, g, 0, 9) == doctest::Approx(2.0 / 3).epsilon(1e-12));
    CHECK(gauge_condition_constant(spec, g, 0, 9, false) == doctest::Approx(2.0 / 3).epsilon(2e-2));
    CHECK(gauge_condition_constant(spec, g, 0, 9, false) >= 2.0 / 3 - 1e-12);
    CHECK(gauge_condition_constant(spec, GaugeFunction::power(1), 0, 9) == doctest::Approx(1.0));
}

TEST_CASE("count times gauge")
{
    const double d = std::log(2.0) / std::log(3.0);
    const auto spec = CantorSpec::middle_thirds(40);
    for (int s : {0, 10, 40})
        CHECK(count_times_gauge(spec, GaugeFunction::power(d), s) == doctest::Approx(1.0).epsilon(1e-12));
    // one child per generation: N_s = 1
    const auto single = CantorSpec::uniform({iv(0, 1)}, {1, Rational(1, 2), Rational(1, 4)}, {1, 1});
    CHECK(single.count(2) == 1);
    CHECK(count_times_gauge(single, GaugeFunction::power(1), 2) == doctest::Approx(0.25));
    // trig set, A = 32: N_4 l_4 is astronomically small as a rational but fine in log space
    const auto trig = CantorSpec::trigonometric(32, 4);
    const double v = count_times_gauge(trig, GaugeFunction::log_scale(1), 4);
    CHECK(std::isfinite(v));
    CHECK(v > count_times_gauge(trig, GaugeFunction::log_scale(1), 3));
}

TEST_CASE("optimal cover cost")
{
    Generation gen;
    gen.intervals = {iv(0, Rational(1, 100)), iv(Rational(1, 2), Rational(51, 100))};
    CHECK(optimal_cover_cost(gen, GaugeFunction::power(1)) == doctest::Approx(0.02).epsilon(1e-14));
    CHECK(optimal_cover_cost(gen, GaugeFunction::power(0.5)) == doctest::Approx(0.2).epsilon(1e-14));

    gen.intervals = {iv(0, Rational(1, 100)), iv(Rational(2, 100), Rational(3, 100))};
    CHECK(optimal_cover_cost(gen, GaugeFunction::power(0.5)) == doctest::Approx(std::sqrt(0.03)).epsilon(1e-14));

    gen.intervals = {iv(Rational(1, 3), Rational(1, 2))};
    CHECK(optimal_cover_cost(gen, GaugeFunction::power(0.5)) == doctest::Approx(std::sqrt(1.0 / 6)).epsilon(1e-14));
}

TEST_CASE("sandwich on middle thirds")
{
    const double d = std::log(2.0) / std::log(3.0);
    const auto spec = CantorSpec::middle_thirds(8);
    const auto b = hausdorff_bounds(spec, GaugeFunction::power(d), 8);
    CHECK(b.upper == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(b.lower == doctest::Approx(b.a / 2 * b.upper));
    CHECK(b.sequence.size() == 9);
    const double dp = optimal_cover_cost(generation(spec, 8), GaugeFunction::power(d));
    CHECK(dp <= b.upper + 1e-12);
    CHECK(dp >= b.lower - 1e-12);
}

TEST_CASE("sampled intervals belong to the generation")
{
    const auto spec = CantorSpec::middle_thirds(6);
    const auto gen = generation(spec, 6);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const Interval x = sample_interval(spec, 6, rng);
        CHECK(std::find(gen.intervals.begin(), gen.intervals.end(), x) != gen.intervals.end());
    }
}

}
