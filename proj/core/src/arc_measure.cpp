#include "korenblum/arc_measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/multiprecision/integer.hpp>

#include "korenblum/cantor.hpp"
#include "korenblum/disk.hpp"

namespace korenblum {

namespace mp = boost::multiprecision;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2 * std::numbers::pi;

Rational floor_of(const Rational& q)
{
    BigInt n = mp::numerator(q), d = mp::denominator(q);
    BigInt f = n / d;
    if (n < 0 && f * d != n)
        f -= 1;
    return Rational(f);
}

Rational frac_of(const Rational& q)
{
    return q - floor_of(q);
}

// atan x - atan y without cancellation when both are large and of one sign
double atan_diff(double x, double y)
{
    if ((x > 1 && y > 1) || (x < -1 && y < -1))
        return std::atan(1 / y) - std::atan(1 / x);
    return std::atan(x) - std::atan(y);
}

struct Kernel {
    double d;
    double K;  // (1 + r) / (1 - r)
    Rational theta;

    explicit Kernel(const RadialPoint& p)
        : d(p.gap()), K((2 - p.gap()) / p.gap()), theta(p.angle().value())
    {
    }

    // P at angular offset u turns, u in [-1/2, 1/2]
    double P(double u) const
    {
        const double s = std::sin(pi * u);
        return d * (2 - d) / (d * d + 4 * (1 - d) * s * s) / two_pi;
    }

    struct Stats {
        double integral = 0;  // of P over the arc, d phi in radians
        double tv = 0;        // total variation of P over the arc
    };

    Stats piece(double u1, double u2) const
    {
        Stats s;
        s.integral = atan_diff(K * std::tan(pi * u2), K * std::tan(pi * u1)) / pi;
        const double p1 = P(u1), p2 = P(u2);
        s.tv = (u1 <= 0 && 0 <= u2) ? 2 * P(0) - p1 - p2 : std::abs(p1 - p2);
        return s;
    }

    Rational offset(const Rational& a) const
    {
        Rational ua = a - theta;
        ua -= floor_of(ua + Rational(1, 2));
        return ua;
    }

    // distance in turns from theta to the arc [a, a + len]
    double distance(const Rational& a, const Rational& len) const
    {
        const Rational ua = offset(a);
        const Rational ub = ua + len;
        if (ua <= 0 || ub >= 1)
            return 0.0;
        return to_double(std::min(ua, Rational(1 - ub)));
    }

    // arc [a, b] in turns, b - a <= 1
    Stats arc(const Rational& a, const Rational& b) const
    {
        const Rational ua = offset(a);
        const Rational ub = ua + (b - a);
        if (ub <= Rational(1, 2))
            return piece(to_double(ua), to_double(ub));
        Stats s1 = piece(to_double(ua), 0.5);
        Stats s2 = piece(-0.5, to_double(ub - 1));
        return {s1.integral + s2.integral, s1.tv + s2.tv};
    }
};

// Error budget: a run of hull h at distance x from theta may contribute
// tol * h / (x + h) / shells, and sum h / (x + h) over a partition of the
// circle is at most about 4 log2(1 / gap), so the total stays near tol.
struct CombIntegrator {
    const Kernel& ker;
    const std::vector<BigInt>& parts;
    double density;
    double tol;
    double shells;
    double sum = 0;

    void node(std::size_t g, const Rational& a, const Rational& L, const Rational& m)
    {
        if (g == parts.size()) {
            sum += density * ker.arc(a, a + L).integral;
            return;
        }
        const BigInt n = parts[g] / 2;
        const Rational c = L / Rational(parts[g]);
        run(g, a, c, m / Rational(n), 0, n);
    }

    // children i0 .. i1-1 of a level-g node, each with its trailing gap
    void run(std::size_t g, const Rational& a, const Rational& c, const Rational& cm,
             const BigInt& i0, const BigInt& i1)
    {
        const BigInt count = i1 - i0;
        const Rational lo = a + 2 * Rational(i0) * c;
        const Rational hull = 2 * Rational(count) * c;
        const Kernel::Stats st = ker.arc(lo, lo + hull);
        // replacing each (child, gap) period by uniform mass costs <= pi * child mass * TV(P)
        const double h = to_double(hull);
        const double allowed = tol * h / (ker.distance(lo, hull) + h) / shells;
        if (pi * to_double(cm) * st.tv <= allowed) {
            sum += to_double(Rational(count) * cm / hull) * st.integral;
            return;
        }
        if (count == 1) {
            node(g + 1, lo, c, cm);
            return;
        }
        const BigInt mid = i0 + count / 2;
        run(g, a, c, cm, i0, mid);
        run(g, a, c, cm, mid, i1);
    }
};

}  // namespace

ArcMeasure ArcMeasure::lebesgue()
{
    return from_arcs({{Rational(0), Rational(1), Rational(1)}});
}

ArcMeasure ArcMeasure::from_arcs(std::vector<ArcPiece> arcs, std::vector<PointMass> atoms)
{
    ArcMeasure m;
    for (auto& a : arcs) {
        if (a.density < 0)
            throw DomainError("ArcMeasure: negative density");
        const Rational len = a.hi - a.lo;
        if (len < 0 || len > 1)
            throw DomainError("ArcMeasure: arc length must lie in [0, 1] turns");
        const Rational lo = frac_of(a.lo);
        if (lo + len <= 1) {
            m.arcs_.push_back({lo, lo + len, a.density});
        } else {
            m.arcs_.push_back({lo, Rational(1), a.density});
            m.arcs_.push_back({Rational(0), lo + len - 1, a.density});
        }
    }
    for (const auto& p : atoms)
        if (!(p.mass >= 0))
            throw DomainError("ArcMeasure: negative point mass");
    std::sort(m.arcs_.begin(), m.arcs_.end(),
              [](const ArcPiece& x, const ArcPiece& y) { return x.lo < y.lo; });
    for (std::size_t i = 1; i < m.arcs_.size(); ++i)
        if (m.arcs_[i].lo < m.arcs_[i - 1].hi)
            throw DomainError("ArcMeasure: arcs overlap");
    m.atoms_ = std::move(atoms);
    return m;
}

ArcMeasure ArcMeasure::point_mass(const AngleFraction& at, double mass)
{
    return from_arcs({}, {{at, mass}});
}

ArcMeasure ArcMeasure::comb(std::vector<BigInt> parts, Rational density)
{
    if (parts.empty())
        throw DomainError("ArcMeasure::comb: need at least one level");
    for (const auto& p : parts)
        if (p < 2 || p % 2 != 0)
            throw DomainError("ArcMeasure::comb: part counts must be even and >= 2");
    if (density < 0)
        throw DomainError("ArcMeasure::comb: negative density");
    ArcMeasure m;
    m.parts_ = std::move(parts);
    m.comb_density_ = std::move(density);
    return m;
}

BigInt ArcMeasure::arc_count() const
{
    if (!is_comb())
        return BigInt(arcs_.size());
    BigInt n = 1;
    for (const auto& p : parts_)
        n *= p / 2;
    return n;
}

std::vector<ArcPiece> ArcMeasure::arcs(std::size_t budget) const
{
    if (!is_comb())
        return arcs_;
    if (arc_count() > budget)
        throw BudgetExceeded("ArcMeasure::arcs: " + arc_count().str() + " arcs exceed budget");
    std::vector<std::pair<Rational, Rational>> cur{{Rational(0), Rational(1)}};
    for (const auto& p : parts_) {
        std::vector<std::pair<Rational, Rational>> next;
        for (const auto& [a, L] : cur) {
            const Rational c = L / Rational(p);
            for (BigInt i = 0; i < p; i += 2)
                next.emplace_back(a + Rational(i) * c, c);
        }
        cur = std::move(next);
    }
    std::vector<ArcPiece> out;
    out.reserve(cur.size());
    for (const auto& [a, L] : cur)
        out.push_back({a, a + L, comb_density_});
    return out;
}

Rational ArcMeasure::absolutely_continuous_mass_over_2pi() const
{
    if (is_comb()) {
        Rational len = 1;
        for (std::size_t g = 0; g < parts_.size(); ++g)
            len /= 2;
        return comb_density_ * len;
    }
    Rational m = 0;
    for (const auto& a : arcs_)
        m += a.density * (a.hi - a.lo);
    return m;
}

double ArcMeasure::total_mass() const
{
    double m = two_pi * to_double(absolutely_continuous_mass_over_2pi());
    for (const auto& p : atoms_)
        m += p.mass;
    return m;
}

Rational ArcMeasure::cumulative(const Rational& x) const
{
    if (!is_comb()) {
        Rational m = 0;
        for (const auto& a : arcs_) {
            if (x <= a.lo)
                break;
            m += a.density * (std::min(x, a.hi) - a.lo);
        }
        return m;
    }
    Rational acc = 0;
    Rational a = 0, L = 1;
    Rational mass = absolutely_continuous_mass_over_2pi();
    for (const auto& p : parts_) {
        const Rational c = L / Rational(p);
        const Rational child = mass / Rational(p / 2);
        const Rational y = (x - a) / c;
        BigInt idx = mp::numerator(floor_of(y));
        if (idx >= p) {
            return acc + mass;
        }
        acc += Rational((idx + 1) / 2) * child;
        if (idx % 2 != 0)
            return acc;
        a += Rational(idx) * c;
        L = c;
        mass = child;
    }
    return acc + mass * (x - a) / L;
}

Rational ArcMeasure::continuous_measure_over_2pi(const Rational& lo, const Rational& hi) const
{
    const Rational len = hi - lo;
    if (len < 0 || len > 1)
        throw DomainError("ArcMeasure::measure: arc length must lie in [0, 1] turns");
    const Rational a = frac_of(lo);
    const Rational b = a + len;
    if (b <= 1)
        return cumulative(b) - cumulative(a);
    return cumulative(Rational(1)) - cumulative(a) + cumulative(b - 1);
}

double ArcMeasure::measure(const Rational& lo, const Rational& hi) const
{
    double m = two_pi * to_double(continuous_measure_over_2pi(lo, hi));
    const Rational len = hi - lo;
    for (const auto& p : atoms_)
        if (frac_of(p.at.value() - lo) <= len)
            m += p.mass;
    return m;
}

double ArcMeasure::poisson_integral(const RadialPoint& p, double tol) const
{
    double v = 0;
    if (p.is_origin()) {
        v = to_double(absolutely_continuous_mass_over_2pi());
        for (const auto& a : atoms_)
            v += a.mass / two_pi;
        return v;
    }
    if (!(p.gap() > 0))
        throw DomainError("poisson_integral: 1 - r underflows double precision");
    const Kernel ker(p);
    if (is_comb()) {
        const Rational mass = absolutely_continuous_mass_over_2pi();
        const double shells = 4 * (std::max(0.0, -std::log2(p.gap())) + 4);
        CombIntegrator ci{ker, parts_, to_double(comb_density_), tol * to_double(mass), shells};
        ci.node(0, Rational(0), Rational(1), mass);
        v = ci.sum;
    } else {
        for (const auto& a : arcs_)
            v += to_double(a.density) * ker.arc(a.lo, a.hi).integral;
    }
    for (const auto& a : atoms_)
        v += a.mass * poisson_kernel(p.with_angle(p.angle() - a.at));
    return v;
}

nlohmann::json ArcMeasure::to_json() const
{
    nlohmann::json j;
    if (is_comb()) {
        j["kind"] = "comb";
        nlohmann::json ps = nlohmann::json::array();
        for (const auto& p : parts_)
            ps.push_back(p.str());
        j["parts"] = ps;
        j["density"] = rational_str(comb_density_);
    } else {
        j["kind"] = "arcs";
        nlohmann::json as = nlohmann::json::array();
        for (const auto& a : arcs_)
            as.push_back({rational_str(a.lo), rational_str(a.hi), rational_str(a.density)});
        j["arcs"] = as;
    }
    nlohmann::json ps = nlohmann::json::array();
    for (const auto& p : atoms_)
        ps.push_back({p.at.str(), p.mass});
    j["atoms"] = ps;
    return j;
}

ArcMeasure build_mu_k(int k)
{
    if (k < 1 || k > 12)
        throw BudgetExceeded("build_mu_k: k must lie in [1, 12]");
    std::vector<BigInt> parts{BigInt(4)};
    for (int j = 1; j < k; ++j)
        parts.push_back(BigInt(1) << (1u << j));
    return ArcMeasure::comb(std::move(parts), Rational(BigInt(1) << k));
}

ArcMeasure build_mu_n_k(int n, int k)
{
    if (n < 0 || k < 1 || k > 12 || n > 64)
        throw BudgetExceeded("build_mu_n_k: requires 0 <= n <= 64 and 1 <= k <= 12");
    std::vector<BigInt> parts{BigInt(1) << (n + 1)};
    for (int j = 1; j < k; ++j)
        parts.push_back(BigInt(1) << ((1u << (j - 1)) * unsigned(n + 1)));
    const Rational density = k >= n ? Rational(BigInt(1) << (k - n)) : Rational(1, BigInt(1) << (n - k));
    return ArcMeasure::comb(std::move(parts), density);
}

std::vector<ArcSpan> dyadic_arcs(int d_min, int d_max)
{
    if (d_min < 0 || d_max < d_min || d_max > 24)
        throw DomainError("dyadic_arcs: need 0 <= d_min <= d_max <= 24");
    std::vector<ArcSpan> out;
    for (int d = d_min; d <= d_max; ++d) {
        const BigInt n = BigInt(1) << d;
        for (BigInt j = 0; j < n; ++j)
            out.emplace_back(Rational(j, n), Rational(j + 1, n));
    }
    return out;
}

std::vector<ArcSpan> dyadic_arcs_through(const std::vector<Rational>& points, int d_min, int d_max)
{
    if (d_min < 0 || d_max < d_min)
        throw DomainError("dyadic_arcs_through: need 0 <= d_min <= d_max");
    std::vector<ArcSpan> out;
    for (const auto& x : points) {
        const Rational f = frac_of(x);
        for (int d = d_min; d <= d_max; ++d) {
            const BigInt n = BigInt(1) << d;
            const BigInt j = mp::numerator(floor_of(f * Rational(n)));
            out.emplace_back(Rational(j, n), Rational(j + 1, n));
        }
    }
    return out;
}

double carleson_log_ratio(const ArcMeasure& mu, const std::vector<ArcSpan>& family)
{
    double worst = 0;
    for (const auto& [lo, hi] : family) {
        const double len = two_pi * to_double(hi - lo);
        if (!(len > 0) || len >= std::numbers::e)
            continue;
        worst = std::max(worst, mu.measure(lo, hi) / (len * std::log(std::numbers::e / len)));
    }
    return worst;
}

std::vector<ShiftWindow> shift_windows(const std::vector<double>& one_minus_r, double a,
                                      double A)
{
    std::vector<ShiftWindow> out;
    for (double d : one_minus_r)
        out.push_back({a * d, A * d});
    return out;
}

std::vector<Rational> concentration_detect(const ArcMeasure& mu, const AngleFraction& theta,
                                           const std::vector<Rational>& half_widths, double kappa)
{
    if (!(kappa > 0))
        throw DomainError("concentration_detect: kappa must be positive");
    std::vector<Rational> out;
    const Rational t = theta.value();
    for (const auto& D : half_widths) {
        if (!(D > 0) || D > Rational(1, 2))
            throw DomainError("concentration_detect: half-widths must lie in (0, 1/2]");
        const double ten_d = 10 * two_pi * to_double(D);
        if (ten_d >= 1)
            continue;
        if (mu.measure(t - D, t + D) >= kappa * ten_d * std::log(1 / ten_d))
            out.push_back(D);
    }
    return out;
}

}  // namespace korenblum
