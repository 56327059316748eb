#include "korenblum/spiral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace korenblum {

namespace {

using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<80>,
                                           boost::multiprecision::et_off>;
using MatrixR = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using VectorR = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

constexpr double r_lo = 1.0 / 6.0;
constexpr double r_hi = 1.0 / 3.0;

std::complex<double> on_spiral(const SpiralFitOptions& o, double t)
{
    const double r = o.r_start + (o.r_end - o.r_start) * t;
    return std::polar(r, 2 * std::numbers::pi * o.turns * t);
}

}  // namespace

SpiralH::SpiralH(std::vector<std::complex<double>> coefficients) : c_(std::move(coefficients))
{
    B_ = 0;
    for (const auto& c : c_)
        B_ += std::abs(c);
}

double SpiralH::operator()(std::complex<double> z) const
{
    std::complex<double> acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = (acc + *it) * z;
    return acc.real();
}

double SpiralH::operator()(const RadialPoint& w) const
{
    if (w.is_origin())
        return 0.0;
    return polar(w.modulus(), w.angle());
}

double SpiralH::polar(double r, const AngleFraction& theta) const
{
    return (*this)(std::polar(r, 2 * std::numbers::pi * theta.centered()));
}

std::pair<double, double> SpiralH::annulus_max(const AngleFraction& theta, int grid) const
{
    const std::complex<double> e = std::polar(1.0, 2 * std::numbers::pi * theta.centered());
    auto f = [&](double r) { return (*this)(r * e); };
    const double step = (r_hi - r_lo) / grid;
    int best = 0;
    double best_v = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid; ++i) {
        const double v = f(r_lo + (i + 0.5) * step);
        if (v > best_v) {
            best_v = v;
            best = i;
        }
    }
    double a = r_lo + std::max(0, best - 1) * step + 0.5 * step;
    double b = r_lo + std::min(grid - 1, best + 1) * step + 0.5 * step;
    const double g = (std::sqrt(5.0) - 1) / 2;
    double x1 = b - g * (b - a), x2 = a + g * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 60; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - g * (b - a);
            f1 = f(x1);
        }
    }
    const double r_best = f1 > f2 ? x1 : x2;
    const double v = std::max(f1, f2);
    if (v >= best_v)
        return {r_best, v};
    return {r_lo + (best + 0.5) * step, best_v};
}

SpiralDiagnostics SpiralH::verify(int n_angles, int n_radii, const SpiralFitOptions& curve) const
{
    SpiralDiagnostics d;
    d.B = B_;
    d.annulus_min = std::numeric_limits<double>::infinity();
    const double step = (r_hi - r_lo) / n_radii;
    for (int a = 0; a < n_angles; ++a) {
        const std::complex<double> e = std::polar(1.0, 2 * std::numbers::pi * a / n_angles);
        double m = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < n_radii; ++i)
            m = std::max(m, (*this)((r_lo + (i + 0.5) * step) * e));
        d.annulus_min = std::min(d.annulus_min, m);
        // |h| / |z| on radii (0, 1]
        for (int i = 1; i <= n_radii; ++i) {
            const double r = double(i) / n_radii;
            d.max_ratio = std::max(d.max_ratio, std::abs((*this)(r * e)) / r);
        }
    }
    d.spiral_min = std::numeric_limits<double>::infinity();
    d.spiral_max = -d.spiral_min;
    const int ns = std::max(2, curve.spiral_samples);
    for (int i = 0; i < ns; ++i) {
        const double v = (*this)(on_spiral(curve, double(i) / (ns - 1)));
        d.spiral_min = std::min(d.spiral_min, v);
        d.spiral_max = std::max(d.spiral_max, v);
    }
    return d;
}

nlohmann::json SpiralH::to_json() const
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::size_t n = 0; n < c_.size(); ++n)
        coeffs.push_back({n + 1, c_[n].real(), c_[n].imag()});
    return {{"coefficients", coeffs}, {"B", B_}};
}

SpiralH SpiralH::from_json(const nlohmann::json& j)
{
    std::vector<std::complex<double>> c;
    for (const auto& row : j.at("coefficients")) {
        const auto n = row.at(0).get<std::size_t>();
        if (n < 1)
            throw DomainError("SpiralH: coefficient index must be >= 1");
        if (c.size() < n)
            c.resize(n);
        c[n - 1] = {row.at(1).get<double>(), row.at(2).get<double>()};
    }
    return SpiralH(std::move(c));
}

SpiralH spiral_h_fit(const SpiralFitOptions& o, SpiralDiagnostics* diagnostics)
{
    if (o.degree < 8)
        throw DomainError("spiral_h_fit: degree must be >= 8");
    if (o.oversample < 1 || !(o.basis_radius > 0) || !(o.ridge >= 0))
        throw DomainError("spiral_h_fit: bad options");
    const int n = o.degree;
    const int m = o.oversample * 2 * n;
    // unknowns x = (Re c_n R^n, Im c_n R^n); h = sum Re(x_n) Re(w^n) - Im(x_n) Im(w^n)
    MatrixR A = MatrixR::Zero(m + 2 * n, 2 * n);
    VectorR b = VectorR::Zero(m + 2 * n);
    const Real pi = boost::math::constants::pi<Real>();
    const Real R = Real(o.basis_radius);
    for (int i = 0; i < m; ++i) {
        const Real t = Real(i) / (m - 1);
        const Real r = Real(o.r_start) + (Real(o.r_end) - Real(o.r_start)) * t;
        const Real ang = 2 * pi * Real(o.turns) * t;
        const Real wr = r / R * cos(ang), wi = r / R * sin(ang);
        Real pr = 1, pi_ = 0;
        for (int k = 0; k < n; ++k) {
            const Real nr = pr * wr - pi_ * wi;
            pi_ = pr * wi + pi_ * wr;
            pr = nr;
            A(i, 2 * k) = pr;
            A(i, 2 * k + 1) = -pi_;
        }
        b(i) = Real(o.target);
    }
    const Real sq = sqrt(Real(o.ridge));
    for (int k = 0; k < 2 * n; ++k)
        A(m + k, k) = sq;
    const VectorR x = A.colPivHouseholderQr().solve(b);
    std::vector<std::complex<double>> c(n);
    Real scale = 1;
    for (int k = 0; k < n; ++k) {
        scale /= R;
        c[k] = {static_cast<double>(x(2 * k) * scale), static_cast<double>(x(2 * k + 1) * scale)};
    }
    SpiralH h(std::move(c));
    const SpiralDiagnostics d = h.verify(o.verify_angles, o.verify_radii, o);
    if (diagnostics)
        *diagnostics = d;
    if (!(d.annulus_min >= 1.0))
        throw FitFailure("spiral_h_fit: annulus maximum " + std::to_string(d.annulus_min) +
                         " < 1 at degree " + std::to_string(n));
    if (!(d.max_ratio <= d.B))
        throw FitFailure("spiral_h_fit: |h(z)| / |z| exceeds B on the grid");
    return h;
}

SeriesValue proposition3_eval_detail(const RadialPoint& p, const LacunaryParams& params,
                                     const SpiralH& h, double tol)
{
    if (!(tol > 0))
        throw DomainError("proposition3_eval: tol must be positive");
    SeriesValue out;
    if (p.is_origin())
        return out;
    const int A = params.A;
    const double log_a = std::log(double(A));
    const double log_b = std::log(h.B());
    for (int k = 0;; ++k) {
        if (k > params.k_max)
            throw TailNotCertified("proposition3_eval: tail not below tol within k_max terms");
        const BigInt ak = int_pow(A, k);
        out.value += std::pow(double(A), k) * h(pow2_power(p, ak));
        out.terms = k + 1;
        // B sum_{n>k} A^n |z|^(2^(A^n)), ratio A |z|^(M_{k+2} - M_{k+1})
        const double e1 = std::pow(double(A), k + 1), e2 = e1 * A;
        const double log_next = log_b + (k + 1) * log_a + p.log_abs_power(e1 * std::numbers::ln2);
        const double log_gap = e2 * std::numbers::ln2 + std::log1p(-std::exp2(e1 - e2));
        const double log_rho = log_a + p.log_abs_power(log_gap);
        if (log_rho < 0) {
            const double bound = std::exp(log_next) / -std::expm1(log_rho);
            if (bound < tol) {
                out.tail_bound = bound;
                return out;
            }
        }
    }
}

double proposition3_eval(const RadialPoint& p, const LacunaryParams& params, const SpiralH& h,
                         double tol)
{
    return proposition3_eval_detail(p, params, h, tol).value;
}

RadialPoint proposition3_witness(const AngleFraction& theta, int N, const LacunaryParams& params,
                                 const SpiralH& h)
{
    if (N < 0)
        throw DomainError("proposition3_witness: N must be >= 0");
    const BigInt e = int_pow(params.A, N + 1);
    const auto [r, v] = h.annulus_max(theta.times_pow2(e));
    if (!(v >= 1.0))
        throw SearchFailure("proposition3_witness: annulus maximum " + std::to_string(v) + " < 1");
    // log|w| = log r / 2^(A^(N+1))
    const double lambda = std::log(-std::log(r)) - e.convert_to<double>() * std::numbers::ln2;
    return RadialPoint::from_lambda(lambda, theta);
}

}  // namespace korenblum
