#pragma once

#include <optional>
#include <string>
#include <vector>

#include "korenblum/term_log.hpp"

namespace korenblum {

// f(z) = prod_{k>=1} (1 + mu z^(beta^k)); q is the exclusion-disk rate.
struct HorowitzParams {
    double mu;
    int beta;
    double q;
    HorowitzParams(double mu, int beta, double q = 0.5);

    // mu > e and 1 - mu^-(1 - 1/sqrt(beta)) >= 1/e; empty when both hold
    std::vector<std::string> violations() const;
};

struct HorowitzValue {
    double log_modulus = 0.0;    // -inf at an exact zero
    double phase_fraction = 0.0; // arg f / (2 pi) in [0, 1)
    bool exact_zero = false;
    int factors = 0;
    double tail_bound = 0.0;     // bound on |log| of the omitted factors
};

HorowitzValue horowitz_eval(const RadialPoint& p, const HorowitzParams& params, double tol,
                            int k_max = 4096);

// z_{k,j}: modulus mu^(-beta^-k), angle fraction (1 + 2j) / (2 beta^k)
RadialPoint horowitz_zero(int k, const BigInt& j, const HorowitzParams& params);

// m with r^(beta^m) >= mu^(-sqrt beta) > r^(beta^(m+1)).
// If drift_bound is given, also requires |m - s log 2 / log beta| < drift_bound.
int horowitz_m_index(const RadialPoint& p, const HorowitzParams& params,
                     std::optional<double> drift_bound = std::nullopt);

struct ExclusionDisk {
    RadialPoint center;
    double radius;
};

// beta^k disks of radius (q / beta)^k around the level-k zeros.
std::vector<ExclusionDisk> horowitz_exclusion_disks(int k, const HorowitzParams& params,
                                                    std::size_t budget = 1u << 20);
double exclusion_radius(int k, const HorowitzParams& params);
// sum_k beta^k eps_k = q / (1 - q)
double exclusion_summability(const HorowitzParams& params);
// Whether p lies in some D_{k,j} with k <= k_max (nearest zero per level).
bool in_exclusion_disks(const RadialPoint& p, const HorowitzParams& params, int k_max);

// a = (log mu - 1) / log beta
double horowitz_exponent(const HorowitzParams& params);

}  // namespace korenblum
