#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "korenblum/lacunary.hpp"

namespace korenblum {

// Least-squares target: h ~ target on a spiral r(t) e^{2 pi i turns t},
// r(t) = r_start + (r_end - r_start) t, with no constant term.
struct SpiralFitOptions {
    int degree = 64;
    double turns = 1.0;
    double r_start = 0.19;
    double r_end = 0.31;
    double target = 2.0;
    int oversample = 8;         // fit points per unknown complex coefficient
    double ridge = 1e-24;       // in the basis (z / basis_radius)^n
    double basis_radius = 0.25;
    int verify_angles = 256;
    int verify_radii = 256;
    int spiral_samples = 512;
};

struct SpiralDiagnostics {
    double annulus_min = 0;  // min over theta of the grid max over r in (1/6, 1/3)
    double spiral_min = 0;   // min of h on the fitted spiral samples
    double spiral_max = 0;
    double max_ratio = 0;    // max of |h(z)| / |z| on the polar grid of the closed disk
    double B = 0;
};

// h(z) = Re sum_{n>=1} c_n z^n
class SpiralH {
public:
    SpiralH() = default;
    explicit SpiralH(std::vector<std::complex<double>> coefficients);

    double operator()(std::complex<double> z) const;
    double operator()(const RadialPoint& w) const;
    double polar(double r, const AngleFraction& theta) const;

    const std::vector<std::complex<double>>& coefficients() const { return c_; }
    int degree() const { return int(c_.size()); }
    // sum |c_n|, so |h(z)| <= B |z| on the closed disk
    double B() const { return B_; }

    // (r, h) maximizing h(r e^{i theta}) over r in (1/6, 1/3): grid then golden section.
    std::pair<double, double> annulus_max(const AngleFraction& theta, int grid = 256) const;

    SpiralDiagnostics verify(int n_angles, int n_radii, const SpiralFitOptions& curve) const;

    nlohmann::json to_json() const;
    static SpiralH from_json(const nlohmann::json& j);

private:
    std::vector<std::complex<double>> c_;
    double B_ = 0;
};

// Fits and verifies; throws FitFailure when the annulus property fails on the grid.
SpiralH spiral_h_fit(const SpiralFitOptions& options = {}, SpiralDiagnostics* diagnostics = nullptr);

// u(z) = sum_k A^k h(z^(2^(A^k)))
SeriesValue proposition3_eval_detail(const RadialPoint& p, const LacunaryParams& params,
                                     const SpiralH& h, double tol);
double proposition3_eval(const RadialPoint& p, const LacunaryParams& params, const SpiralH& h,
                         double tol);

// w_N = r_N^(2^-(A^(N+1))) e^{i theta} with h(r_N e^{i theta 2^(A^(N+1))}) maximal.
RadialPoint proposition3_witness(const AngleFraction& theta, int N, const LacunaryParams& params,
                                 const SpiralH& h);

}  // namespace korenblum
