#include "korenblum/radial_point.hpp"

#include <cmath>
#include <numbers>

namespace korenblum {

void RadialPoint::init_gap(double s, double d)
{
    scale_ = s;
    gap_ = d;
    if (d > 1e-5) {
        log_r_ = std::log1p(-d);
        lambda_ = std::log(-log_r_);
        return;
    }
    // -log(1-d) = d (1 + d/2 + d^2/3 + ...)
    const double log_d = d > 0 ? std::log(d) : -s * std::numbers::ln2;
    lambda_ = log_d + std::log1p(d / 2 + d * d / 3 + d * d * d / 4);
    log_r_ = -std::exp(lambda_);
}

RadialPoint RadialPoint::from_scale(double s, AngleFraction theta)
{
    if (!(s >= 0) || !std::isfinite(s))
        throw DomainError("RadialPoint: scale must be finite and >= 0");
    RadialPoint p;
    p.angle_ = std::move(theta);
    if (s > 0)
        p.init_gap(s, std::exp2(-s));
    return p;
}

RadialPoint RadialPoint::from_gap(double one_minus_r, AngleFraction theta)
{
    if (!(one_minus_r > 0 && one_minus_r <= 1))
        throw DomainError("RadialPoint: 1 - r must lie in (0, 1]");
    RadialPoint p;
    p.angle_ = std::move(theta);
    if (one_minus_r < 1)
        p.init_gap(-std::log2(one_minus_r), one_minus_r);
    return p;
}

RadialPoint RadialPoint::from_modulus(double r, AngleFraction theta)
{
    if (!(r >= 0 && r < 1))
        throw DomainError("RadialPoint: modulus must lie in [0, 1)");
    return from_gap(1.0 - r, std::move(theta));
}

RadialPoint RadialPoint::from_log_modulus(double log_r, AngleFraction theta)
{
    if (!(log_r < 0))
        throw DomainError("RadialPoint: log r must be negative");
    RadialPoint p;
    p.angle_ = std::move(theta);
    if (std::isinf(log_r))
        return p;
    const double d = -std::expm1(log_r);
    p.scale_ = -std::log2(d);
    p.gap_ = d;
    p.log_r_ = log_r;
    p.lambda_ = std::log(-log_r);
    return p;
}

RadialPoint RadialPoint::from_lambda(double lambda, AngleFraction theta)
{
    if (std::isnan(lambda))
        throw DomainError("RadialPoint: lambda is NaN");
    RadialPoint p;
    p.angle_ = std::move(theta);
    const double t = std::exp(lambda);
    if (std::isinf(t))
        return p;
    p.lambda_ = lambda;
    p.log_r_ = -t;
    if (t > 1e-5) {
        p.gap_ = -std::expm1(-t);
        p.scale_ = -std::log2(p.gap_);
    } else {
        // 1 - r = t (1 - t/2 + ...), so s = -lambda / ln 2 + t / (2 ln 2)
        p.gap_ = t * (1 - t / 2);
        p.scale_ = (-lambda + t / 2) / std::numbers::ln2;
    }
    return p;
}

RadialPoint RadialPoint::with_angle(AngleFraction theta) const
{
    RadialPoint p = *this;
    p.angle_ = std::move(theta);
    return p;
}

double RadialPoint::modulus() const
{
    return std::exp(log_r_);
}

double RadialPoint::log_abs_power(double log_m) const
{
    return -std::exp(log_m + lambda_);
}

}  // namespace korenblum
