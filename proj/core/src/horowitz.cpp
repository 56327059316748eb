#include "korenblum/horowitz.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "korenblum/lacunary.hpp"

namespace korenblum {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double eps = std::numeric_limits<double>::epsilon();

}  // namespace

HorowitzParams::HorowitzParams(double mu_, int beta_, double q_) : mu(mu_), beta(beta_), q(q_)
{
    if (!(mu > 1) || !std::isfinite(mu))
        throw DomainError("HorowitzParams: mu must be > 1");
    if (beta < 2)
        throw DomainError("HorowitzParams: beta must be an integer > 1");
    if (!(q > 0 && q < 1))
        throw DomainError("HorowitzParams: q must lie in (0, 1)");
}

std::vector<std::string> HorowitzParams::violations() const
{
    std::vector<std::string> out;
    if (!(mu > std::numbers::e))
        out.push_back("mu <= e: lower-bound exponent is not positive");
    const double lhs = 1.0 - std::pow(mu, -(1.0 - 1.0 / std::sqrt(double(beta))));
    if (!(lhs >= 1.0 / std::numbers::e))
        out.push_back("1 - mu^-(1 - 1/sqrt(beta)) < 1/e");
    return out;
}

HorowitzValue horowitz_eval(const RadialPoint& p, const HorowitzParams& params, double tol,
                            int k_max)
{
    if (!(tol > 0))
        throw DomainError("horowitz_eval: tol must be positive");
    HorowitzValue out;
    if (p.is_origin())
        return out;
    const double log_mu = std::log(params.mu);
    const double log_beta = std::log(double(params.beta));
    const Rational half(1, 2);
    BigInt bk = 1;
    double phase = 0.0;
    for (int k = 1;; ++k) {
        if (k > k_max)
            throw TailNotCertified("horowitz_eval: tail not below tol within k_max factors");
        bk *= params.beta;
        const double lw = log_mu + p.log_abs_power(k * log_beta);
        const AngleFraction phi = p.angle().times(bk);
        // |1 + w e^{2 pi i phi}|^2 = (1 - w)^2 + 4 w cos^2(pi phi)
        const double off = to_double(half - phi.value());  // cos(pi phi) = sin(pi off)
        const double w = std::exp(lw);
        const double one_minus_w = -std::expm1(lw);
        const double s = std::sin(pi * off);
        const double mod2 = one_minus_w * one_minus_w + 4.0 * w * s * s;
        // rho_k is not a double, so an exact zero shows up as phase exactly 1/2
        // with |log w| at rounding level
        const bool on_ray = phi.value() == half;
        if ((on_ray && std::abs(lw) <= 64 * eps * std::max(1.0, log_mu)) ||
            std::sqrt(mod2) < 1e-300) {
            out.exact_zero = true;
            out.log_modulus = -std::numeric_limits<double>::infinity();
        }
        if (!out.exact_zero)
            out.log_modulus += 0.5 * std::log(mod2);
        const double a = 2 * pi * phi.centered();
        phase += std::atan2(w * std::sin(a), 1.0 + w * std::cos(a));
        out.factors = k;
        // omitted factors: |log(1 + x)| <= |x| / (1 - |x|), ratio r^(beta^(k+2) - beta^(k+1))
        const double lx = log_mu + p.log_abs_power((k + 1) * log_beta);
        const double log_rho =
            p.log_abs_power((k + 1) * log_beta + std::log(double(params.beta - 1)));
        if (lx < 0 && log_rho < 0) {
            const double x = std::exp(lx);
            const double bound = x / (1.0 - x) / -std::expm1(log_rho);
            if (bound < tol) {
                out.tail_bound = bound;
                break;
            }
        }
    }
    double f = phase / (2 * pi);
    f -= std::floor(f);
    out.phase_fraction = f >= 1.0 ? 0.0 : f;
    return out;
}

RadialPoint horowitz_zero(int k, const BigInt& j, const HorowitzParams& params)
{
    if (k < 1)
        throw DomainError("horowitz_zero: k must be >= 1");
    const BigInt bk = int_pow(params.beta, k);
    if (j < 0 || j >= bk)
        throw DomainError("horowitz_zero: j out of range [0, beta^k)");
    const double log_rho = -std::log(params.mu) / std::pow(double(params.beta), k);
    return RadialPoint::from_log_modulus(log_rho, AngleFraction(1 + 2 * j, 2 * bk));
}

int horowitz_m_index(const RadialPoint& p, const HorowitzParams& params,
                     std::optional<double> drift_bound)
{
    // beta^m t <= sqrt(beta) log mu < beta^(m+1) t with t = -log r
    const double log_beta = std::log(double(params.beta));
    const double target = std::log(std::sqrt(double(params.beta)) * std::log(params.mu));
    const double x = (target - p.log_neg_log_modulus()) / log_beta;
    if (!(x >= -1e-12))
        throw DomainError("horowitz_m_index: r too small, no m >= 0 exists");
    const int m = int(std::floor(x + 1e-12));
    if (drift_bound) {
        const double drift = std::abs(m - p.scale() * std::numbers::ln2 / log_beta);
        if (!(drift < *drift_bound))
            throw Error("horowitz_m_index: drift " + std::to_string(drift) + " exceeds bound");
    }
    return m;
}

double exclusion_radius(int k, const HorowitzParams& params)
{
    return std::pow(params.q / params.beta, k);
}

double exclusion_summability(const HorowitzParams& params)
{
    return params.q / (1.0 - params.q);
}

std::vector<ExclusionDisk> horowitz_exclusion_disks(int k, const HorowitzParams& params,
                                                    std::size_t budget)
{
    if (k < 1)
        throw DomainError("horowitz_exclusion_disks: k must be >= 1");
    const BigInt bk = int_pow(params.beta, k);
    if (bk > budget)
        throw BudgetExceeded("horowitz_exclusion_disks: beta^k exceeds budget");
    const double eps_k = exclusion_radius(k, params);
    std::vector<ExclusionDisk> out;
    out.reserve(bk.convert_to<std::size_t>());
    for (BigInt j = 0; j < bk; ++j)
        out.push_back({horowitz_zero(k, j, params), eps_k});
    return out;
}

bool in_exclusion_disks(const RadialPoint& p, const HorowitzParams& params, int k_max)
{
    if (p.is_origin())
        return false;
    const double log_mu = std::log(params.mu);
    BigInt bk = 1;
    for (int k = 1; k <= k_max; ++k) {
        bk *= params.beta;
        const double bkd = std::pow(double(params.beta), k);
        const double log_rho = -log_mu / bkd;
        const double gap_rho = -std::expm1(log_rho);
        const double rho = std::exp(log_rho);
        const double r = p.modulus();
        const double dr = gap_rho - p.gap();
        // nearest zero: angular offset (frac(beta^k theta) - 1/2) / beta^k
        const double off = p.angle().times(bk).to_double() - 0.5;
        const double s = std::sin(pi * off / bkd);
        const double dist2 = dr * dr + 4.0 * r * rho * s * s;
        const double eps_k = exclusion_radius(k, params);
        if (dist2 < eps_k * eps_k)
            return true;
    }
    return false;
}

double horowitz_exponent(const HorowitzParams& params)
{
    if (!(params.mu > std::numbers::e))
        throw DomainError("horowitz_exponent: requires mu > e");
    return (std::log(params.mu) - 1.0) / std::log(double(params.beta));
}

}  // namespace korenblum
