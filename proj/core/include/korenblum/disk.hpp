#pragma once

#include <span>
#include <vector>

#include "korenblum/radial_point.hpp"

namespace korenblum {

// Constant C of the majorant u(z) <= C log(e / (1 - |z|)).
struct KorenblumBound {
    double C;
    explicit KorenblumBound(double c);
};

double poisson_kernel(const RadialPoint& p);
// Same kernel from 1 - r and a float angle in radians.
double poisson_kernel(double one_minus_r, double theta);

// Q = -dP/dphi
double poisson_angular_derivative(const RadialPoint& p);
double poisson_angular_derivative(double one_minus_r, double phi);

// min over the grid of P(r e^{i theta}) - (1 - tau) P(r e^{i(theta + delta)}).
// Requires 0 < r < 1, 0 < tau < 1, 0 < delta < tau (1 - r).
double harnack_shift_margin(double r, double tau, double delta, std::span<const double> thetas);

double majorant(const RadialPoint& p, const KorenblumBound& bound);
double majorant_at_scale(double s, const KorenblumBound& bound);

// Scales s = j / steps for j = steps .. s_max * steps.
std::vector<double> radial_grid(int s_max, int steps_per_octave);

// Integral of P(r e^{i theta}) over a full turn by composite Gauss-Legendre
// on panels graded geometrically away from theta = 0.
double poisson_normalization(double one_minus_r);

}  // namespace korenblum
