#pragma once

#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "korenblum/radial_point.hpp"

namespace korenblum {

// Arc [lo, hi] in turns with constant density per radian.
struct ArcPiece {
    Rational lo;
    Rational hi;
    Rational density;
};

struct PointMass {
    AngleFraction at;
    double mass;
};

using ArcSpan = std::pair<Rational, Rational>;  // [lo, hi] in turns, hi - lo <= 1

// Finite measure on the circle made of constant-density arcs and atoms.
// Nested "comb" measures (cut the circle into m_0 parts and keep every second,
// cut each kept part into m_1 parts and keep every second, ...) are held
// symbolically so measures with 2^250 arcs stay cheap.
class ArcMeasure {
public:
    static ArcMeasure lebesgue();
    static ArcMeasure from_arcs(std::vector<ArcPiece> arcs, std::vector<PointMass> atoms = {});
    static ArcMeasure point_mass(const AngleFraction& at, double mass);
    static ArcMeasure comb(std::vector<BigInt> parts, Rational density);

    bool is_comb() const { return !parts_.empty(); }
    const std::vector<BigInt>& comb_parts() const { return parts_; }
    BigInt arc_count() const;
    // Explicit arc list; throws BudgetExceeded above the budget.
    std::vector<ArcPiece> arcs(std::size_t budget = 1u << 20) const;
    const std::vector<PointMass>& atoms() const { return atoms_; }

    // continuous part mass / (2 pi), exact
    Rational absolutely_continuous_mass_over_2pi() const;
    double total_mass() const;

    // mu of the closed arc [lo, hi] (turns, wrap allowed)
    double measure(const Rational& lo, const Rational& hi) const;
    Rational continuous_measure_over_2pi(const Rational& lo, const Rational& hi) const;

    // integral of P(r e^{i(theta - phi)}) d mu(phi), absolute error <= tol * (mass / 2 pi)
    double poisson_integral(const RadialPoint& p, double tol = 1e-7) const;

    nlohmann::json to_json() const;

private:
    Rational cumulative(const Rational& x) const;  // continuous mass / 2 pi on [0, x], x in [0, 1]

    std::vector<ArcPiece> arcs_;
    std::vector<PointMass> atoms_;
    std::vector<BigInt> parts_;
    Rational comb_density_;
};

// Density 2^k on C_k: two opposite quarters, then each arc cut into 2^(2^(j)) parts, every second kept.
ArcMeasure build_mu_k(int k);
// Density 2^(k - n) on C_k^(n): 2^(n+1) parts first, then 2^(2^(j-1)(n+1)) parts per arc.
ArcMeasure build_mu_n_k(int n, int k);

// All dyadic arcs [j 2^-d, (j+1) 2^-d] with d_min <= d <= d_max.
std::vector<ArcSpan> dyadic_arcs(int d_min, int d_max);
// For each point, the dyadic arc of every depth d_min..d_max that contains it.
std::vector<ArcSpan> dyadic_arcs_through(const std::vector<Rational>& points, int d_min, int d_max);

// max over the family of mu(J) / (|J| log(e / |J|)), |J| in radians (< e required)
double carleson_log_ratio(const ArcMeasure& mu, const std::vector<ArcSpan>& family);

struct ShiftWindow {
    double delta;  // a (1 - r)
    double Delta;  // A (1 - r)
};
std::vector<ShiftWindow> shift_windows(const std::vector<double>& one_minus_r, double a,
                                      double A);

// Half-widths Delta (turns) with mu(theta - Delta, theta + Delta) >= kappa 10 D log(1 / (10 D)),
// D = 2 pi Delta in radians.
std::vector<Rational> concentration_detect(const ArcMeasure& mu, const AngleFraction& theta,
                                           const std::vector<Rational>& half_widths, double kappa);

}  // namespace korenblum
