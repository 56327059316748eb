#include "korenblum/cantor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/multiprecision/integer.hpp>

namespace korenblum {

namespace mp = boost::multiprecision;

namespace {

const char* placement_name(Placement p)
{
    switch (p) {
    case Placement::Uniform:
        return "uniform";
    case Placement::Alternating:
        return "alternating";
    case Placement::Explicit:
        return "explicit";
    case Placement::Trigonometric:
        return "trigonometric";
    }
    return "?";
}

Placement placement_from(const std::string& s)
{
    if (s == "uniform")
        return Placement::Uniform;
    if (s == "alternating")
        return Placement::Alternating;
    if (s == "explicit")
        return Placement::Explicit;
    if (s == "trigonometric")
        return Placement::Trigonometric;
    throw DomainError("CantorSpec: unknown placement '" + s + "'");
}

BigInt pow2(const BigInt& e)
{
    return BigInt(1) << e.convert_to<unsigned>();
}

BigInt random_below(const BigInt& n, std::mt19937_64& rng)
{
    if (n <= 1)
        return 0;
    const unsigned bits = mp::msb(BigInt(n - 1)) + 1;
    for (;;) {
        BigInt x = 0;
        for (unsigned got = 0; got < bits; got += 64)
            x = (x << 64) | BigInt(rng());
        x &= (BigInt(1) << bits) - 1;
        if (x < n)
            return x;
    }
}

}  // namespace

std::string rational_str(const Rational& q)
{
    if (mp::denominator(q) == 1)
        return mp::numerator(q).str();
    return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

Rational parse_rational(const std::string& s)
{
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(s));
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw DomainError("parse_rational: cannot parse '" + s + "'");
    }
}

std::vector<std::string> CantorSpec::violations(const std::vector<Interval>& roots,
                                                const std::vector<Rational>& lengths,
                                                const std::vector<BigInt>& children)
{
    std::vector<std::string> out;
    if (roots.empty())
        out.push_back("no generation-0 intervals");
    if (lengths.empty() || lengths.size() != children.size() + 1) {
        out.push_back("need one more length than child counts");
        return out;
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].length() != lengths[0])
            out.push_back("generation-0 interval " + std::to_string(i) + " does not have length l_0");
        if (i > 0 && !(roots[i - 1].hi < roots[i].lo))
            out.push_back("generation-0 intervals overlap or are unsorted");
    }
    for (std::size_t s = 0; s < lengths.size(); ++s) {
        if (!(lengths[s] > 0))
            out.push_back("l_" + std::to_string(s) + " is not positive");
        if (s > 0 && !(lengths[s] < lengths[s - 1]))
            out.push_back("lengths are not strictly decreasing at s=" + std::to_string(s));
    }
    for (std::size_t s = 0; s < children.size(); ++s) {
        if (children[s] < 1)
            out.push_back("k_" + std::to_string(s) + " < 1");
        // k_s l_{s+1} < l_s, cross-multiplied to skip gcd work on huge operands
        else if (!(children[s] * mp::numerator(lengths[s + 1]) * mp::denominator(lengths[s]) <
                   mp::numerator(lengths[s]) * mp::denominator(lengths[s + 1])))
            out.push_back("spacing violated: k_" + std::to_string(s) + " l_" +
                          std::to_string(s + 1) + " >= l_" + std::to_string(s));
    }
    return out;
}

void CantorSpec::check() const
{
    auto v = violations(roots_, lengths_, children_);
    if (placement_ == Placement::Alternating)
        for (std::size_t s = 0; s < children_.size(); ++s)
            if (lengths_[s] != 2 * children_[s] * lengths_[s + 1])
                v.push_back("alternating placement needs l_s = 2 k_s l_{s+1}");
    if (placement_ == Placement::Explicit)
        for (std::size_t s = 0; s < offsets_.size(); ++s) {
            Rational prev_end = 0;
            for (std::size_t i = 0; i < offsets_[s].size(); ++i) {
                const Rational& o = offsets_[s][i];
                if (o < prev_end || o + lengths_[s + 1] > lengths_[s])
                    v.push_back("explicit offsets overlap or leave the parent at s=" +
                                std::to_string(s));
                prev_end = o + lengths_[s + 1];
            }
        }
    if (!v.empty())
        throw DomainError("CantorSpec: " + v.front());
}

CantorSpec CantorSpec::middle_thirds(int depth)
{
    if (depth < 0)
        throw DomainError("middle_thirds: depth must be >= 0");
    std::vector<Rational> l;
    Rational len = 1;
    for (int s = 0; s <= depth; ++s) {
        l.push_back(len);
        len /= 3;
    }
    return uniform({{Rational(0), Rational(1)}}, std::move(l), std::vector<BigInt>(depth, BigInt(2)));
}

CantorSpec CantorSpec::uniform(std::vector<Interval> roots, std::vector<Rational> lengths,
                               std::vector<BigInt> children)
{
    CantorSpec c;
    c.placement_ = Placement::Uniform;
    c.roots_ = std::move(roots);
    c.lengths_ = std::move(lengths);
    c.children_ = std::move(children);
    c.check();
    return c;
}

CantorSpec CantorSpec::alternating(std::vector<Interval> roots, std::vector<Rational> lengths,
                                   std::vector<BigInt> children)
{
    CantorSpec c = uniform(std::move(roots), std::move(lengths), std::move(children));
    c.placement_ = Placement::Alternating;
    c.check();
    return c;
}

CantorSpec CantorSpec::explicit_offsets(std::vector<Interval> roots, std::vector<Rational> lengths,
                                        std::vector<std::vector<Rational>> offsets)
{
    CantorSpec c;
    c.placement_ = Placement::Explicit;
    c.roots_ = std::move(roots);
    c.lengths_ = std::move(lengths);
    for (const auto& o : offsets)
        c.children_.push_back(BigInt(o.size()));
    c.offsets_ = std::move(offsets);
    c.check();
    return c;
}

CantorSpec CantorSpec::trigonometric(int A, int depth)
{
    if (A < 2 || depth < 0)
        throw DomainError("trigonometric: requires A >= 2 and depth >= 0");
    CantorSpec c;
    c.placement_ = Placement::Trigonometric;
    c.A_ = A;
    BigInt e = 1;  // A^s
    for (int s = 0; s <= depth; ++s) {
        c.lengths_.push_back(Rational(1, 4 * pow2(e)));
        const BigInt e_next = e * A;
        if (s < depth) {
            // children centred at n / M_{s+1} with |n - c M_{s+1}| <= (R - 1) / 8, R = M_{s+1} / M_s
            const BigInt R = pow2(e_next - e);
            c.children_.push_back(2 * ((R - 1) / 8) + 1);
        }
        e = e_next;
    }
    c.roots_ = {{Rational(-1, 16), Rational(1, 16)}, {Rational(7, 16), Rational(9, 16)}};
    c.check();
    return c;
}

CantorSpec CantorSpec::dyadic_comb(int depth)
{
    if (depth < 0)
        throw DomainError("dyadic_comb: depth must be >= 0");
    std::vector<Rational> l{Rational(1, 4)};
    std::vector<BigInt> k;
    for (int g = 0; g < depth; ++g) {
        const BigInt parts = BigInt(1) << (1u << (g + 1));
        k.push_back(parts / 2);
        l.push_back(l.back() / parts);
    }
    return alternating({{Rational(0), Rational(1, 4)}, {Rational(1, 2), Rational(3, 4)}},
                       std::move(l), std::move(k));
}

const Rational& CantorSpec::length(int s) const
{
    if (s < 0 || s > depth())
        throw DomainError("CantorSpec: generation " + std::to_string(s) + " beyond depth");
    return lengths_[s];
}

BigInt CantorSpec::count(int s) const
{
    if (s < 0 || s > depth())
        throw DomainError("CantorSpec: generation " + std::to_string(s) + " beyond depth");
    BigInt n = roots_.size();
    for (int i = 0; i < s; ++i)
        n *= children_[i];
    return n;
}

Rational CantorSpec::child_start(int s, const Interval& parent, const BigInt& i) const
{
    if (s < 0 || s >= depth())
        throw DomainError("child_start: generation has no children in this spec");
    const BigInt& k = children_[s];
    if (i < 0 || i >= k)
        throw DomainError("child_start: child index out of range");
    const Rational& ls = lengths_[s];
    const Rational& lc = lengths_[s + 1];
    switch (placement_) {
    case Placement::Uniform:
        if (k == 1)
            return parent.lo + (ls - lc) / 2;
        return parent.lo + Rational(i) * (ls - lc) / Rational(k - 1);
    case Placement::Alternating:
        return parent.lo + 2 * Rational(i) * lc;
    case Placement::Explicit:
        return parent.lo + offsets_[s][i.convert_to<std::size_t>()];
    case Placement::Trigonometric: {
        const Rational M_next = 1 / (4 * lc);  // 2^(A^(s+1))
        const Rational c_scaled = parent.center() * M_next;
        if (mp::denominator(c_scaled) != 1)
            throw DomainError("child_start: parent is not a trigonometric-rule interval");
        const BigInt half = (k - 1) / 2;
        const BigInt n = mp::numerator(c_scaled) - half + i;
        return (Rational(n) - Rational(1, 8)) / M_next;
    }
    }
    return parent.lo;
}

std::vector<Interval> CantorSpec::children_of(int s, const Interval& parent) const
{
    std::vector<Interval> out;
    const BigInt& k = children_[s];
    out.reserve(k.convert_to<std::size_t>());
    const Rational& lc = lengths_[s + 1];
    for (BigInt i = 0; i < k; ++i) {
        Rational lo = child_start(s, parent, i);
        Rational hi = lo + lc;
        out.push_back({std::move(lo), std::move(hi)});
    }
    return out;
}

nlohmann::json CantorSpec::to_json() const
{
    nlohmann::json j;
    j["placement"] = placement_name(placement_);
    if (placement_ == Placement::Trigonometric) {
        j["A"] = A_;
        j["depth"] = depth();
        return j;
    }
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& r : roots_)
        roots.push_back({rational_str(r.lo), rational_str(r.hi)});
    j["roots"] = roots;
    nlohmann::json ls = nlohmann::json::array();
    for (const auto& l : lengths_)
        ls.push_back(rational_str(l));
    j["lengths"] = ls;
    if (placement_ == Placement::Explicit) {
        nlohmann::json offs = nlohmann::json::array();
        for (const auto& level : offsets_) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& o : level)
                row.push_back(rational_str(o));
            offs.push_back(row);
        }
        j["offsets"] = offs;
    } else {
        nlohmann::json ks = nlohmann::json::array();
        for (const auto& k : children_)
            ks.push_back(k.str());
        j["children"] = ks;
    }
    return j;
}

CantorSpec CantorSpec::from_json(const nlohmann::json& j)
{
    const Placement p = placement_from(j.at("placement").get<std::string>());
    if (p == Placement::Trigonometric)
        return trigonometric(j.at("A").get<int>(), j.at("depth").get<int>());
    std::vector<Interval> roots;
    for (const auto& r : j.at("roots"))
        roots.push_back({parse_rational(r.at(0).get<std::string>()),
                         parse_rational(r.at(1).get<std::string>())});
    std::vector<Rational> lengths;
    for (const auto& l : j.at("lengths"))
        lengths.push_back(parse_rational(l.get<std::string>()));
    if (p == Placement::Explicit) {
        std::vector<std::vector<Rational>> offs;
        for (const auto& level : j.at("offsets")) {
            offs.emplace_back();
            for (const auto& o : level)
                offs.back().push_back(parse_rational(o.get<std::string>()));
        }
        return explicit_offsets(std::move(roots), std::move(lengths), std::move(offs));
    }
    std::vector<BigInt> ks;
    for (const auto& k : j.at("children"))
        ks.push_back(BigInt(k.is_string() ? k.get<std::string>() : std::to_string(k.get<long long>())));
    if (p == Placement::Alternating)
        return alternating(std::move(roots), std::move(lengths), std::move(ks));
    return uniform(std::move(roots), std::move(lengths), std::move(ks));
}

std::string Generation::to_csv() const
{
    std::ostringstream os;
    os << "lo,hi\n";
    for (const auto& iv : intervals)
        os << rational_str(iv.lo) << ',' << rational_str(iv.hi) << '\n';
    return os.str();
}

Generation generation(const CantorSpec& spec, int s, std::uint64_t budget)
{
    if (s < 0 || s > spec.depth())
        throw DomainError("generation: s outside the spec depth");
    if (spec.count(s) > budget)
        throw BudgetExceeded("generation: N_" + std::to_string(s) + " = " + spec.count(s).str() +
                             " exceeds budget " + std::to_string(budget));
    Generation g;
    g.intervals = spec.roots();
    for (int t = 0; t < s; ++t) {
        std::vector<Interval> next;
        for (const auto& parent : g.intervals) {
            auto kids = spec.children_of(t, parent);
            next.insert(next.end(), std::make_move_iterator(kids.begin()),
                        std::make_move_iterator(kids.end()));
        }
        g.intervals = std::move(next);
    }
    g.s = s;
    return g;
}

Interval sample_interval(const CantorSpec& spec, int s, std::mt19937_64& rng)
{
    if (s < 0 || s > spec.depth())
        throw DomainError("sample_interval: s outside the spec depth");
    Interval cur = spec.roots()[std::size_t(rng() % spec.roots().size())];
    for (int t = 0; t < s; ++t) {
        const BigInt i = random_below(spec.children()[t], rng);
        Rational lo = spec.child_start(t, cur, i);
        cur = {lo, lo + spec.lengths()[t + 1]};
    }
    return cur;
}

double gauge_condition_constant(const CantorSpec& spec, const GaugeFunction& gauge, int s_lo,
                                int s_hi, bool use_shortcuts, int grid)
{
    if (s_lo > s_hi || s_lo < 0)
        throw DomainError("gauge_condition_constant: empty s range");
    if (s_hi + 1 > spec.depth())
        throw DomainError("gauge_condition_constant: spec too shallow for s range");
    double a = 1.0;
    for (int s = s_lo; s <= s_hi; ++s) {
        const double log_ls = log_of(spec.length(s));
        const double log_ln = log_of(spec.length(s + 1));
        // log of lambda(l)/l relative to its value at l_{s+1}
        const double base = gauge.log_value(log_ln) - log_ln;
        if (!std::isfinite(base))
            return 0.0;
        double worst = 0.0;
        if (use_shortcuts && gauge.kind() == GaugeFunction::Kind::Power) {
            const double d = gauge.parameter();
            worst = d < 1 ? (d - 1) * (log_ls - log_ln) : 0.0;
        } else if (use_shortcuts && gauge.kind() == GaugeFunction::Kind::LogScale) {
            worst = gauge.parameter() * (std::log(std::abs(log_ls)) - std::log(std::abs(log_ln)));
        } else {
            for (int i = 0; i <= grid; ++i) {
                const double lt = log_ln + (log_ls - log_ln) * i / grid;
                const double lv = gauge.log_value(lt);
                if (!std::isfinite(lv))
                    return 0.0;
                worst = std::min(worst, lv - lt - base);
            }
        }
        a = std::min(a, std::exp(worst));
    }
    return a;
}

double count_times_gauge(const CantorSpec& spec, const GaugeFunction& gauge, int s)
{
    const Rational& ls = spec.length(s);
    const double log_ls = log_of(ls);
    const double log_nl = log_ratio(spec.count(s) * mp::numerator(ls), mp::denominator(ls));
    return std::exp(log_nl + gauge.log_value(log_ls) - log_ls);
}

HausdorffBounds hausdorff_bounds(const CantorSpec& spec, const GaugeFunction& gauge, int s_max)
{
    if (s_max < 2)
        throw DomainError("hausdorff_bounds: s_max must be >= 2");
    if (s_max > spec.depth())
        throw DomainError("hausdorff_bounds: s_max beyond spec depth");
    HausdorffBounds b;
    for (int s = 0; s <= s_max; ++s)
        b.sequence.push_back(count_times_gauge(spec, gauge, s));
    const int from = (s_max + 1) / 2;
    b.upper = *std::min_element(b.sequence.begin() + from, b.sequence.end());
    b.a = gauge_condition_constant(spec, gauge, from, s_max - 1);
    b.lower = b.a / 2 * b.upper;
    return b;
}

double optimal_cover_cost(const Generation& gen, const GaugeFunction& gauge, std::size_t budget)
{
    const auto& iv = gen.intervals;
    const std::size_t n = iv.size();
    if (n == 0)
        return 0.0;
    if (n > budget)
        throw BudgetExceeded("optimal_cover_cost: " + std::to_string(n) + " atoms exceed budget");
    // common denominator so hull lengths are integer differences
    BigInt D = 1;
    for (const auto& x : iv) {
        D = mp::lcm(D, mp::denominator(x.lo));
        D = mp::lcm(D, mp::denominator(x.hi));
    }
    std::vector<BigInt> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = mp::numerator(iv[i].lo) * (D / mp::denominator(iv[i].lo));
        hi[i] = mp::numerator(iv[i].hi) * (D / mp::denominator(iv[i].hi));
        if (i > 0 && lo[i] < hi[i - 1])
            throw DomainError("optimal_cover_cost: atoms must be sorted and disjoint");
    }
    const double log_D = log_of(D);
    const bool small = mp::msb(BigInt(mp::abs(hi.back()) + mp::abs(lo.front()) + 1)) < 62;
    std::vector<long long> lo64, hi64;
    if (small) {
        for (std::size_t i = 0; i < n; ++i) {
            lo64.push_back(lo[i].convert_to<long long>());
            hi64.push_back(hi[i].convert_to<long long>());
        }
    }
    auto hull_cost = [&](std::size_t j, std::size_t i) {
        // atoms j..i inclusive
        const double log_len = small ? std::log(double(hi64[i] - lo64[j])) - log_D
                                     : log_of(BigInt(hi[i] - lo[j])) - log_D;
        return std::exp(gauge.log_value(log_len));
    };
    std::vector<double> best(n + 1, std::numeric_limits<double>::infinity());
    best[0] = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i; j-- > 0;) {
            const double c = hull_cost(j, i - 1);
            if (c >= best[i])
                break;  // larger hulls only cost more
            best[i] = std::min(best[i], best[j] + c);
        }
    }
    return best[n];
}

}  // namespace korenblum
