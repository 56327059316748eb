#pragma once

#include <compare>
#include <string>

#include "korenblum/types.hpp"

namespace korenblum {

// theta / (2 pi) as an exact reduced fraction in [0, 1).
class AngleFraction {
public:
    AngleFraction() : num_(0), den_(1) {}
    AngleFraction(BigInt num, BigInt den);

    static AngleFraction dyadic(const BigInt& num, unsigned log2_den);
    static AngleFraction from_rational(const Rational& q);
    // Nearest multiple of 2^-bits to x / (2 pi); used for float inputs only.
    static AngleFraction from_radians(double x, unsigned bits = 60);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    Rational value() const { return Rational(num_, den_); }

    // frac(m * x)
    AngleFraction times(const BigInt& m) const;
    // frac(2^e * x) without forming 2^e
    AngleFraction times_pow2(const BigInt& e) const;

    AngleFraction operator+(const AngleFraction& o) const;
    AngleFraction operator-(const AngleFraction& o) const;
    AngleFraction operator-() const;

    double to_double() const;  // in [0, 1)
    double centered() const;   // representative in [-1/2, 1/2)
    double radians() const;    // 2 pi * to_double()
    double cos() const;
    double sin() const;
    // 2 sin^2(theta/2) = 1 - cos(theta), accurate near theta = 0
    double one_minus_cos() const;

    std::string str() const;

    bool operator==(const AngleFraction& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const AngleFraction& o) const;

private:
    BigInt num_;
    BigInt den_;
};

}  // namespace korenblum
