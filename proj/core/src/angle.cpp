#include "korenblum/angle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/multiprecision/integer.hpp>

namespace korenblum {

namespace mp = boost::multiprecision;

double log_of(const BigInt& n)
{
    if (n <= 0)
        throw DomainError("log_of: nonpositive integer");
    const unsigned b = mp::msb(n);
    if (b < 960)
        return std::log(n.convert_to<double>());
    const unsigned shift = b - 60;
    BigInt top = n >> shift;
    return std::log(top.convert_to<double>()) + shift * std::numbers::ln2;
}

double log_ratio(const BigInt& a, const BigInt& b)
{
    if (a <= 0 || b <= 0)
        throw DomainError("log_ratio: nonpositive argument");
    const long sa = std::max(0L, long(mp::msb(a)) - 60);
    const long sb = std::max(0L, long(mp::msb(b)) - 60);
    const double ta = BigInt(a >> sa).convert_to<double>();
    const double tb = BigInt(b >> sb).convert_to<double>();
    return std::log(ta / tb) + double(sa - sb) * std::numbers::ln2;
}

double log_of(const Rational& q)
{
    if (q <= 0)
        throw DomainError("log_of: nonpositive rational");
    return log_of(mp::numerator(q)) - log_of(mp::denominator(q));
}

double to_double(const Rational& q)
{
    BigInt n = mp::numerator(q);
    const BigInt& d = mp::denominator(q);
    if (n == 0)
        return 0.0;
    const bool neg = n < 0;
    if (neg)
        n = -n;
    const long k = 64 + long(mp::msb(d)) - long(mp::msb(n));
    BigInt quo = k >= 0 ? BigInt((n << k) / d) : BigInt(n / (d << -k));
    double v = std::ldexp(quo.convert_to<double>(), int(-k));
    return neg ? -v : v;
}

AngleFraction::AngleFraction(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_ <= 0)
        throw DomainError("AngleFraction: denominator must be positive");
    num_ %= den_;
    if (num_ < 0)
        num_ += den_;
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = mp::gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

AngleFraction AngleFraction::dyadic(const BigInt& num, unsigned log2_den)
{
    return AngleFraction(num, BigInt(1) << log2_den);
}

AngleFraction AngleFraction::from_rational(const Rational& q)
{
    return AngleFraction(mp::numerator(q), mp::denominator(q));
}

AngleFraction AngleFraction::from_radians(double x, unsigned bits)
{
    if (!std::isfinite(x))
        throw DomainError("AngleFraction::from_radians: non-finite angle");
    double f = x / (2.0 * std::numbers::pi);
    f -= std::floor(f);
    const double scaled = std::ldexp(f, int(std::min(bits, 52u)));
    BigInt n(static_cast<long long>(std::llround(scaled)));
    return dyadic(n << (bits - std::min(bits, 52u)), bits);
}

AngleFraction AngleFraction::times(const BigInt& m) const
{
    BigInt mm = m % den_;
    if (mm < 0)
        mm += den_;
    return AngleFraction(mm * num_, den_);
}

AngleFraction AngleFraction::times_pow2(const BigInt& e) const
{
    if (e < 0)
        throw DomainError("times_pow2: negative exponent");
    if (num_ == 0)
        return {};
    const unsigned v = mp::lsb(den_);
    if (e < v) {
        const unsigned ee = e.convert_to<unsigned>();
        return AngleFraction(num_ << ee, den_);
    }
    BigInt odd = den_ >> v;
    if (odd == 1)
        return {};
    BigInt p = mp::powm(BigInt(2), BigInt(e - v), odd);
    return AngleFraction(p * num_, odd);
}

AngleFraction AngleFraction::operator+(const AngleFraction& o) const
{
    return AngleFraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

AngleFraction AngleFraction::operator-(const AngleFraction& o) const
{
    return AngleFraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

AngleFraction AngleFraction::operator-() const
{
    return AngleFraction(-num_, den_);
}

double AngleFraction::to_double() const
{
    double x = korenblum::to_double(value());
    return x >= 1.0 ? std::nextafter(1.0, 0.0) : x;
}

double AngleFraction::centered() const
{
    if (2 * num_ >= den_)
        return korenblum::to_double(Rational(num_ - den_, den_));
    return korenblum::to_double(value());
}

double AngleFraction::radians() const
{
    return 2.0 * std::numbers::pi * to_double();
}

double AngleFraction::cos() const
{
    return std::cos(2.0 * std::numbers::pi * centered());
}

double AngleFraction::sin() const
{
    return std::sin(2.0 * std::numbers::pi * centered());
}

double AngleFraction::one_minus_cos() const
{
    const double s = std::sin(std::numbers::pi * centered());
    return 2.0 * s * s;
}

std::string AngleFraction::str() const
{
    return num_.str() + "/" + den_.str();
}

std::strong_ordering AngleFraction::operator<=>(const AngleFraction& o) const
{
    BigInt a = num_ * o.den_, b = o.num_ * den_;
    if (a < b)
        return std::strong_ordering::less;
    if (a > b)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace korenblum
