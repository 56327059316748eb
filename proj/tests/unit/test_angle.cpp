#include <doctest.h>

#include <cmath>
#include <numbers>

#include "korenblum/radial_point.hpp"
#include "korenblum/term_log.hpp"

using namespace korenblum;

TEST_SUITE("angle") {

TEST_CASE("reduction and arithmetic")
{
    CHECK(AngleFraction(5, 4) == AngleFraction(1, 4));
    CHECK(AngleFraction(-1, 4) == AngleFraction(3, 4));
    CHECK(AngleFraction(2, 8).den() == 4);
    CHECK(AngleFraction(1, 3) + AngleFraction(2, 3) == AngleFraction());
    CHECK(-AngleFraction(1, 3) == AngleFraction(2, 3));
    CHECK(AngleFraction::dyadic(3, 2).str() == "3/4");
    CHECK(AngleFraction(3, 4).centered() == -0.25);
}

TEST_CASE("times_pow2 agrees with explicit multiplication")
{
    const AngleFraction x(BigInt(123456789), BigInt("1000000007"));
    for (int e : {0, 1, 10, 64, 200}) {
        const BigInt m = BigInt(1) << e;
        CHECK(x.times_pow2(e) == x.times(m));
    }
    // dyadic angles vanish once the power reaches the denominator
    CHECK(AngleFraction::dyadic(5, 12).times_pow2(12) == AngleFraction());
    CHECK(AngleFraction::dyadic(5, 12).times_pow2(BigInt(1) << 40) == AngleFraction());
    // odd denominators keep structure at huge powers: 2^(2^k) mod 3 = 1
    CHECK(AngleFraction(1, 3).times_pow2(BigInt(1) << 4096) == AngleFraction(1, 3));
}

TEST_CASE("trigonometry")
{
    CHECK(AngleFraction(1, 8).cos() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(AngleFraction(1, 4).sin() == doctest::Approx(1.0).epsilon(1e-15));
    const AngleFraction tiny = AngleFraction::dyadic(1, 60);
    const double t = 2 * std::numbers::pi * std::ldexp(1.0, -60);
    CHECK(tiny.one_minus_cos() == doctest::Approx(t * t / 2).epsilon(1e-14));
    CHECK(AngleFraction::from_radians(std::numbers::pi / 2).to_double() == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("radial points")
{
    const RadialPoint p = RadialPoint::from_scale(3);
    CHECK(p.gap() == 0.125);
    CHECK(p.modulus() == 0.875);
    CHECK(p.log_modulus() == doctest::Approx(std::log(0.875)).epsilon(1e-15));
    CHECK(RadialPoint::from_gap(0.25).scale() == doctest::Approx(2.0));
    CHECK(RadialPoint::from_modulus(0.0).is_origin());
    CHECK_THROWS_AS(RadialPoint::from_gap(0.0), DomainError);
    CHECK_THROWS_AS(RadialPoint::from_modulus(1.0), DomainError);

    // z^(2^e) with e far beyond double range of r^M
    const RadialPoint q = RadialPoint::from_scale(3000);
    const RadialPoint w = pow2_power(q, 2990);
    CHECK(w.log_neg_log_modulus() ==
          doctest::Approx(q.log_neg_log_modulus() + 2990 * std::numbers::ln2).epsilon(1e-12));
    CHECK(w.log_modulus() == doctest::Approx(-std::exp2(-10)).epsilon(1e-9));
    CHECK(int_power(RadialPoint::from_modulus(0.5, AngleFraction(1, 3)), 3).angle() == AngleFraction());
    CHECK(int_power(RadialPoint::from_modulus(0.5), 3).modulus() == doctest::Approx(0.125).epsilon(1e-15));
}

}
