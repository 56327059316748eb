#pragma once

#include <cmath>

#include "korenblum/radial_point.hpp"

namespace korenblum {

// c z^M kept as log|c z^M| and the exact phase of z^M.
struct TermLog {
    double log_magnitude = -std::numeric_limits<double>::infinity();
    AngleFraction phase;

    double magnitude() const { return std::exp(log_magnitude); }
    double real() const { return std::exp(log_magnitude) * phase.cos(); }
    double imag() const { return std::exp(log_magnitude) * phase.sin(); }
};

// z^(2^e) as a point: modulus via log space, angle via exact reduction.
RadialPoint pow2_power(const RadialPoint& z, const BigInt& e);
// z^m for a positive integer m.
RadialPoint int_power(const RadialPoint& z, const BigInt& m);

}  // namespace korenblum
