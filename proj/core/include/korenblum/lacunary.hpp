#pragma once

#include "korenblum/term_log.hpp"

namespace korenblum {

// u(z) = Re sum_k A^k z^(2^(A^k))
struct LacunaryParams {
    int A;
    int k_max;
    explicit LacunaryParams(int a, int kmax = 64);
};

struct SeriesValue {
    double value = 0.0;
    int terms = 0;          // number of terms summed
    double tail_bound = 0;  // certified bound on the omitted tail
};

// N with A^N <= s < A^(N+1); throws DomainError if s < A.
int lacunary_choose_N(const RadialPoint& p, const LacunaryParams& params);
int lacunary_choose_N(double s, int A);

// A exp(-(2^(A^(N+2) - A^(N+1)) - 1)): the consecutive-term ratio bound at n = N+1.
double lacunary_delta(int A, int N);
// delta(A) := lacunary_delta(A, 0), the supremum over all N.
double lacunary_delta(int A);
// (2 / (1 - delta(A))) * A / log 2
double lacunary_constant(int A);

// A^k z^(2^(A^k))
TermLog lacunary_term(const RadialPoint& p, int A, int k);

SeriesValue lacunary_eval_detail(const RadialPoint& p, const LacunaryParams& params, double tol);
double lacunary_eval(const RadialPoint& p, const LacunaryParams& params, double tol);

// A^k as an exact integer.
BigInt int_pow(int base, int k);

}  // namespace korenblum
