#include <doctest.h>

#include <cmath>
#include <numbers>

#include "korenblum/arc_measure.hpp"
#include "korenblum/cantor.hpp"
#include "korenblum/disk.hpp"

using namespace korenblum;
using std::numbers::pi;

TEST_SUITE("measures") {

TEST_CASE("dyadic measure masses")
{
    for (int k = 1; k <= 6; ++k)
        CHECK(build_mu_k(k).total_mass() == doctest::Approx(2 * pi).epsilon(1e-14));
    CHECK(build_mu_k(3).arc_count() == CantorSpec::dyadic_comb(2).count(2));
    CHECK(build_mu_n_k(1, 1).total_mass() == doctest::Approx(pi).epsilon(1e-14));
    const auto wide = ArcMeasure::comb({BigInt(1) << 250}, Rational(1));
    CHECK(wide.arc_count() == BigInt(1) << 249);
    CHECK(wide.total_mass() == doctest::Approx(pi).epsilon(1e-14));
    CHECK_THROWS_AS(build_mu_k(6).arcs(1000), BudgetExceeded);
}

TEST_CASE("arc measure of intervals")
{
    const auto leb = ArcMeasure::lebesgue();
    CHECK(leb.total_mass() == doctest::Approx(2 * pi));
    CHECK(leb.measure(Rational(1, 8), Rational(3, 8)) == doctest::Approx(pi / 2));
    CHECK(leb.measure(Rational(7, 8), Rational(9, 8)) == doctest::Approx(pi / 2));
    const auto mu = build_mu_k(1);
    CHECK(mu.measure(0, Rational(1, 4)) == doctest::Approx(pi));
    CHECK(mu.measure(Rational(1, 4), Rational(1, 2)) == doctest::Approx(0.0));
}

TEST_CASE("Carleson ratio")
{
    const auto fam = dyadic_arcs(2, 16);
    // mu(J) = |J|: the ratio is 1 / log(e / |J|), largest on the longest arcs
    CHECK(carleson_log_ratio(ArcMeasure::lebesgue(), fam) ==
          doctest::Approx(1 / std::log(std::numbers::e / (pi / 2))).epsilon(1e-12));
    // unit atom: largest on the shortest arc through it
    const double J = 2 * pi * std::ldexp(1.0, -16);
    CHECK(carleson_log_ratio(ArcMeasure::point_mass(AngleFraction(), 1.0), fam) ==
          doctest::Approx(1 / (J * std::log(std::numbers::e / J))).epsilon(1e-12));
    CHECK(fam.size() == (std::size_t(1) << 17) - 4);
}

TEST_CASE("Poisson integral")
{
    const auto leb = ArcMeasure::lebesgue();
    for (double s : {0.5, 4.0, 20.0, 45.0})
        CHECK(leb.poisson_integral(RadialPoint::from_scale(s, AngleFraction(1, 7))) == doctest::Approx(1.0).epsilon(1e-9));

    const AngleFraction at(3, 8);
    const auto pm = ArcMeasure::point_mass(at, 2.5);
    for (double s : {1.0, 10.0, 30.0}) {
        const RadialPoint p = RadialPoint::from_scale(s, at);
        const double d = std::ldexp(1.0, -int(s));
        CHECK(pm.poisson_integral(p) == doctest::Approx(2.5 * (2 - d) / d / (2 * pi)).epsilon(1e-12));
        CHECK(pm.poisson_integral(p) == doctest::Approx(2.5 * poisson_kernel(RadialPoint::from_scale(s))).epsilon(1e-12));
    }

    const auto comb = ArcMeasure::comb({4, 8, 16}, Rational(3));
    const auto flat = ArcMeasure::from_arcs(comb.arcs());
    for (double s : {2.0, 7.5, 13.0}) {
        for (const AngleFraction t : {AngleFraction(), AngleFraction(1, 64), AngleFraction(5, 13)}) {
            const RadialPoint p = RadialPoint::from_scale(s, t);
            CHECK(comb.poisson_integral(p, 1e-9) == doctest::Approx(flat.poisson_integral(p, 1e-9)).epsilon(1e-7));
        }
    }
    CHECK_THROWS_AS(leb.poisson_integral(RadialPoint::from_scale(2000)), DomainError);
}

TEST_CASE("Poisson integral of a dyadic measure tends to the local density")
{
    const auto mu = build_mu_k(1);
    CHECK(mu.poisson_integral(RadialPoint::from_scale(20, AngleFraction(1, 8))) == doctest::Approx(2.0).epsilon(1e-5));
    CHECK(mu.poisson_integral(RadialPoint::from_scale(20, AngleFraction(3, 8))) < 1e-5);
}

TEST_CASE("concentration")
{
    const std::vector<Rational> widths{Rational(1, 1000), Rational(1, 70), Rational(1, 50)};
    // Lebesgue mass 2D meets 10 D log(1 / (10 D)) only for e^-0.2 <= 10 D < 1; 10 D >= 1 is not tested
    const auto hits = concentration_detect(ArcMeasure::lebesgue(), AngleFraction(), widths, 1.0);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0] == Rational(1, 70));
    const auto atom = concentration_detect(ArcMeasure::point_mass(AngleFraction(), 1.0), AngleFraction(), widths, 1.0);
    CHECK(atom == std::vector<Rational>{Rational(1, 1000), Rational(1, 70)});
}

TEST_CASE("shift windows")
{
    const auto w = shift_windows({0.5, 0.01}, 0.1, 10);
    REQUIRE(w.size() == 2);
    CHECK(w[1].delta == doctest::Approx(0.001));
    CHECK(w[1].Delta == doctest::Approx(0.1));
}

}
