#include "korenblum/lacunary.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace korenblum {

namespace {

constexpr double ln2 = std::numbers::ln2;

// log(2^(A^(k+1)) - 2^(A^k))
double log_gap_exponent(int A, int k)
{
    const double lo = std::pow(double(A), k);
    const double hi = lo * A;
    return hi * ln2 + std::log1p(-std::exp2(lo - hi));
}

}  // namespace

BigInt int_pow(int base, int k)
{
    BigInt r = 1;
    for (int i = 0; i < k; ++i)
        r *= base;
    return r;
}

LacunaryParams::LacunaryParams(int a, int kmax) : A(a), k_max(kmax)
{
    if (A < 2)
        throw DomainError("LacunaryParams: A must be >= 2");
    if (k_max < 0)
        throw DomainError("LacunaryParams: k_max must be >= 0");
}

int lacunary_choose_N(double s, int A)
{
    if (A < 2)
        throw DomainError("lacunary_choose_N: A must be >= 2");
    if (!(s >= A))
        throw DomainError("lacunary_choose_N: too close to center (s < A)");
    int N = 1;
    double next = double(A) * A;
    while (next <= s) {
        next *= A;
        ++N;
    }
    return N;
}

int lacunary_choose_N(const RadialPoint& p, const LacunaryParams& params)
{
    return lacunary_choose_N(p.scale(), params.A);
}

double lacunary_delta(int A, int N)
{
    if (A < 2 || N < 0)
        throw DomainError("lacunary_delta: requires A >= 2, N >= 0");
    const double gap = std::pow(double(A), N + 2) - std::pow(double(A), N + 1);
    if (gap > 1100)
        return 0.0;
    return A * std::exp(-(std::exp2(gap) - 1.0));
}

double lacunary_delta(int A)
{
    return lacunary_delta(A, 0);
}

double lacunary_constant(int A)
{
    const double d = lacunary_delta(A);
    if (d >= 1)
        throw DomainError("lacunary_constant: delta(A) >= 1");
    return 2.0 / (1.0 - d) * A / ln2;
}

TermLog lacunary_term(const RadialPoint& p, int A, int k)
{
    const double ak = std::pow(double(A), k);
    TermLog t;
    t.phase = p.angle().times_pow2(int_pow(A, k));
    t.log_magnitude = k * std::log(double(A)) + p.log_abs_power(ak * ln2);
    return t;
}

SeriesValue lacunary_eval_detail(const RadialPoint& p, const LacunaryParams& params, double tol)
{
    if (!(tol > 0))
        throw DomainError("lacunary_eval: tol must be positive");
    SeriesValue out;
    if (p.is_origin())
        return out;
    const int A = params.A;
    const double log_a = std::log(double(A));
    for (int k = 0;; ++k) {
        if (k > params.k_max)
            throw TailNotCertified("lacunary_eval: tail not below tol within k_max = " +
                                   std::to_string(params.k_max) + " terms");
        out.value += lacunary_term(p, A, k).real();
        out.terms = k + 1;
        // tail after k: T_{k+1} / (1 - rho), rho = A r^(M_{k+2} - M_{k+1})
        const double log_next = (k + 1) * log_a + p.log_abs_power(std::pow(double(A), k + 1) * ln2);
        const double log_rho = log_a + p.log_abs_power(log_gap_exponent(A, k + 1));
        if (log_rho < 0) {
            const double bound = std::exp(log_next) / -std::expm1(log_rho);
            if (bound < tol) {
                out.tail_bound = bound;
                return out;
            }
        }
    }
}

double lacunary_eval(const RadialPoint& p, const LacunaryParams& params, double tol)
{
    return lacunary_eval_detail(p, params, tol).value;
}

}  // namespace korenblum
