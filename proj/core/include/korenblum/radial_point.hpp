#pragma once

#include <limits>

#include "korenblum/angle.hpp"

namespace korenblum {

// z = r e^{i theta} with 1 - r = 2^-s. The scale s is primary so points
// far closer to the boundary than double spacing stay meaningful.
class RadialPoint {
public:
    RadialPoint() = default;  // the origin

    static RadialPoint from_scale(double s, AngleFraction theta = {});
    static RadialPoint from_gap(double one_minus_r, AngleFraction theta = {});
    static RadialPoint from_modulus(double r, AngleFraction theta = {});
    // log r < 0 given directly (r^M underflow-free arithmetic starts here)
    static RadialPoint from_log_modulus(double log_r, AngleFraction theta = {});
    // lambda = log(-log r); survives when log r itself underflows to -0.
    static RadialPoint from_lambda(double lambda, AngleFraction theta = {});

    const AngleFraction& angle() const { return angle_; }
    RadialPoint with_angle(AngleFraction theta) const;

    double scale() const { return scale_; }
    double gap() const { return gap_; }  // 1 - r, 0 once it underflows
    double modulus() const;
    double log_modulus() const { return log_r_; }
    // log(-log r); +inf at the origin.
    double log_neg_log_modulus() const { return lambda_; }
    bool is_origin() const { return scale_ == 0.0; }

    // log(M * |log r|) for a positive integer M given via log M.
    double log_power_decay(double log_m) const { return log_m + lambda_; }
    // log |z^M| = M log r, computed in log space; -inf on underflow.
    double log_abs_power(double log_m) const;

private:
    AngleFraction angle_;
    void init_gap(double s, double d);

    double scale_ = 0.0;
    double gap_ = 1.0;
    double log_r_ = -std::numeric_limits<double>::infinity();
    double lambda_ = std::numeric_limits<double>::infinity();
};

}  // namespace korenblum
