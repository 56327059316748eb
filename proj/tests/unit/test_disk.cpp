#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "korenblum/disk.hpp"

using namespace korenblum;
using std::numbers::pi;

TEST_SUITE("disk") {

TEST_CASE("kernel at the centre and on the real axis")
{
    CHECK(poisson_kernel(RadialPoint()) == doctest::Approx(1 / (2 * pi)).epsilon(1e-15));
    CHECK(poisson_kernel(RadialPoint::from_modulus(0.5, AngleFraction(3, 7))) ==
          doctest::Approx(1 / (2 * pi) * 0.75 / (1 - 2 * 0.5 * std::cos(6 * pi / 7) + 0.25)).epsilon(1e-13));
    CHECK(poisson_kernel(RadialPoint::from_modulus(0.5)) == doctest::Approx(3 / (2 * pi)).epsilon(1e-14));
    CHECK(poisson_kernel(RadialPoint::from_modulus(0.5, AngleFraction(1, 2))) ==
          doctest::Approx(1 / (6 * pi)).epsilon(1e-14));
}

TEST_CASE("kernel stays accurate near the boundary")
{
    // P(r, 0) = (1 + r) / ((1 - r) 2 pi) exactly in terms of d = 1 - r
    for (int s : {10, 20, 30, 40}) {
        const double d = std::ldexp(1.0, -s);
        CHECK(poisson_kernel(RadialPoint::from_scale(s)) == doctest::Approx((2 - d) / d / (2 * pi)).epsilon(1e-13));
    }
    // far side: (1 - r) / ((1 + r) 2 pi)
    const double d = std::ldexp(1.0, -40);
    CHECK(poisson_kernel(RadialPoint::from_scale(40, AngleFraction(1, 2))) ==
          doctest::Approx(d / (2 - d) / (2 * pi)).epsilon(1e-12));
}

TEST_CASE("angular derivative matches a finite difference")
{
    CHECK(poisson_angular_derivative(0.5, pi / 2) == doctest::Approx(0.0763943726841098).epsilon(1e-12));
    const double h = 1e-6;
    const double fd = -(poisson_kernel(0.5, pi / 2 + h) - poisson_kernel(0.5, pi / 2 - h)) / (2 * h);
    CHECK(std::abs(poisson_angular_derivative(0.5, pi / 2) - fd) < 1e-6);
    CHECK(poisson_angular_derivative(0.3, 0.0) == 0.0);
    CHECK(std::abs(poisson_angular_derivative(0.3, pi)) < 1e-16);
}

TEST_CASE("kernel shape: even, decreasing in |theta|, Q odd and nonnegative on [0, pi]")
{
    for (double d : {0.5, 1e-3, 1e-9}) {
        double prev = INFINITY;
        for (int i = 0; i <= 1000; ++i) {
            const double t = pi * i / 1000;
            const double P = poisson_kernel(d, t);
            CHECK(P > 0);
            CHECK(P == poisson_kernel(d, -t));
            CHECK(P <= prev);
            prev = P;
            const double Q = poisson_angular_derivative(d, t);
            CHECK(Q >= 0);
            CHECK(Q == -poisson_angular_derivative(d, -t));
        }
    }
}

TEST_CASE("normalization")
{
    for (int s : {0, 1, 5, 10, 15, 20})
        CHECK(std::abs(poisson_normalization(std::ldexp(1.0, -s)) - 1) < 1e-10);
}

TEST_CASE("Harnack shift margin")
{
    std::vector<double> grid(4096);
    for (std::size_t i = 0; i < grid.size(); ++i)
        grid[i] = -pi + 2 * pi * double(i) / double(grid.size());
    // r -> 0: P is constant 1/2pi, margin tau/2pi
    CHECK(harnack_shift_margin(1e-9, 0.5, 1e-10, grid) == doctest::Approx(0.5 / (2 * pi)).epsilon(1e-6));
    CHECK(harnack_shift_margin(0.9, 0.5, 0.04, grid) > 0);

    std::vector<double> fine(65536);
    for (std::size_t i = 0; i < fine.size(); ++i)
        fine[i] = -pi + 2 * pi * double(i) / double(fine.size());
    CHECK(harnack_shift_margin(0.99, 0.1, 0.0009, fine) > 0);

    CHECK_THROWS_AS(harnack_shift_margin(0.9, 0.5, 0.05, grid), DomainError);
    CHECK_THROWS_AS(harnack_shift_margin(0.9, 0.5, 0.06, grid), DomainError);
    CHECK_THROWS_AS(harnack_shift_margin(1.0, 0.5, 0.01, grid), DomainError);
}

TEST_CASE("majorant")
{
    CHECK(majorant(RadialPoint(), KorenblumBound(1)) == doctest::Approx(1.0));
    CHECK(majorant_at_scale(10, KorenblumBound(2)) == doctest::Approx(15.8629436111989).epsilon(1e-13));
    CHECK(majorant(RadialPoint::from_scale(4096), KorenblumBound(1)) ==
          doctest::Approx(2840.13085157354).epsilon(1e-13));
    CHECK_THROWS_AS(KorenblumBound(0), DomainError);
}

TEST_CASE("radial grid")
{
    CHECK(radial_grid(3, 1) == std::vector<double>{1, 2, 3});
    CHECK(radial_grid(2, 2) == std::vector<double>{1, 1.5, 2});
    const auto g = radial_grid(4096, 1);
    CHECK(g.size() == 4096);
    const RadialPoint deep = RadialPoint::from_scale(g.back());
    CHECK(deep.scale() == 4096);
    CHECK(deep.log_modulus() <= 0);  // -2^-4096 underflows
    CHECK(std::isfinite(deep.log_neg_log_modulus()));
    CHECK(deep.log_neg_log_modulus() == doctest::Approx(-4096 * std::numbers::ln2).epsilon(1e-12));
}

}
