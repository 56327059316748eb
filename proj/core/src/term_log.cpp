#include "korenblum/term_log.hpp"

#include <numbers>

namespace korenblum {

RadialPoint int_power(const RadialPoint& z, const BigInt& m)
{
    if (m <= 0)
        throw DomainError("int_power: exponent must be positive");
    return RadialPoint::from_lambda(log_of(m) + z.log_neg_log_modulus(), z.angle().times(m));
}

RadialPoint pow2_power(const RadialPoint& z, const BigInt& e)
{
    if (e < 0)
        throw DomainError("pow2_power: exponent must be >= 0");
    const double log_m = e.convert_to<double>() * std::numbers::ln2;
    return RadialPoint::from_lambda(log_m + z.log_neg_log_modulus(), z.angle().times_pow2(e));
}

}  // namespace korenblum
