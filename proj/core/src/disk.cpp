#include "korenblum/disk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

namespace korenblum {

namespace {

constexpr double inv_two_pi = 0.5 / std::numbers::pi;

// d^2 + 2 r (1 - cos theta), written with 1 - cos = 2 sin^2(theta/2)
inline double kernel_denominator(double d, double sin_half_sq)
{
    return d * d + 4.0 * (1.0 - d) * sin_half_sq;
}

double sin_half_sq_of(const AngleFraction& a)
{
    const double s = std::sin(std::numbers::pi * a.centered());
    return s * s;
}

double sin_half_sq_of(double theta)
{
    const double s = std::sin(0.5 * theta);
    return s * s;
}

}  // namespace

KorenblumBound::KorenblumBound(double c) : C(c)
{
    if (!(c > 0) || !std::isfinite(c))
        throw DomainError("KorenblumBound: C must be positive");
}

double poisson_kernel(const RadialPoint& p)
{
    if (p.is_origin())
        return inv_two_pi;
    const double d = p.gap();
    return inv_two_pi * d * (2.0 - d) / kernel_denominator(d, sin_half_sq_of(p.angle()));
}

double poisson_kernel(double d, double theta)
{
    return inv_two_pi * d * (2.0 - d) / kernel_denominator(d, sin_half_sq_of(theta));
}

double poisson_angular_derivative(const RadialPoint& p)
{
    if (p.is_origin())
        return 0.0;
    const double d = p.gap();
    const double den = kernel_denominator(d, sin_half_sq_of(p.angle()));
    return inv_two_pi * 2.0 * (1.0 - d) * d * (2.0 - d) * p.angle().sin() / (den * den);
}

double poisson_angular_derivative(double d, double phi)
{
    const double den = kernel_denominator(d, sin_half_sq_of(phi));
    return inv_two_pi * 2.0 * (1.0 - d) * d * (2.0 - d) * std::sin(phi) / (den * den);
}

double harnack_shift_margin(double r, double tau, double delta, std::span<const double> thetas)
{
    if (!(r > 0 && r < 1))
        throw DomainError("harnack_shift_margin: r must lie in (0, 1)");
    if (!(tau > 0 && tau < 1))
        throw DomainError("harnack_shift_margin: tau must lie in (0, 1)");
    if (!(delta > 0))
        throw DomainError("harnack_shift_margin: delta must be positive");
    if (delta >= tau * (1 - r))
        throw DomainError("harnack_shift_margin: requires delta < tau (1 - r)");
    if (thetas.empty())
        throw DomainError("harnack_shift_margin: empty theta grid");
    const double d = 1.0 - r;
    double margin = std::numeric_limits<double>::infinity();
    for (double t : thetas)
        margin = std::min(margin, poisson_kernel(d, t) - (1.0 - tau) * poisson_kernel(d, t + delta));
    return margin;
}

double majorant_at_scale(double s, const KorenblumBound& bound)
{
    return bound.C * (1.0 + s * std::numbers::ln2);
}

double majorant(const RadialPoint& p, const KorenblumBound& bound)
{
    return majorant_at_scale(p.scale(), bound);
}

std::vector<double> radial_grid(int s_max, int steps_per_octave)
{
    if (s_max < 1 || steps_per_octave < 1)
        throw DomainError("radial_grid: s_max and steps_per_octave must be >= 1");
    std::vector<double> out;
    out.reserve(std::size_t(s_max) * steps_per_octave);
    for (long j = steps_per_octave; j <= long(s_max) * steps_per_octave; ++j)
        out.push_back(double(j) / steps_per_octave);
    return out;
}

double poisson_normalization(double d)
{
    if (!(d > 0 && d <= 1))
        throw DomainError("poisson_normalization: 1 - r must lie in (0, 1]");
    using boost::math::quadrature::gauss;
    auto f = [d](double t) { return poisson_kernel(d, t); };
    // panels [0, w], [w, 2w], [2w, 4w], ... up to pi; symmetric in theta
    const double pi = std::numbers::pi;
    double w = std::min(d, pi);
    double sum = gauss<double, 30>::integrate(f, 0.0, w);
    double a = w;
    while (a < pi) {
        const double b = std::min(2.0 * a, pi);
        sum += gauss<double, 30>::integrate(f, a, b);
        a = b;
    }
    return 2.0 * sum;
}

}  // namespace korenblum
