#pragma once

namespace sinno {

enum class SigmoidalKind { Ramp, BSpline };

// Non-decreasing generator eta with exact saturation: eta(t) = 0 for
// t <= -m and eta(t) = 1 for t >= m, where m is the half-support.
// Two generators are provided: the ramp (m = 1/2) and the antiderivative
// of the central B-spline of order r (m = r/2).
class Sigmoidal {
public:
    static Sigmoidal Ramp();
    static Sigmoidal BSpline(int order);  // order in [2, 20]

    SigmoidalKind kind() const { return kind_; }
    int order() const { return order_; }            // 0 for the ramp
    double half_support() const { return half_support_; }

private:
    Sigmoidal(SigmoidalKind kind, int order, double half_support)
        : kind_(kind), order_(order), half_support_(half_support) {}

    SigmoidalKind kind_;
    int order_;
    double half_support_;
};

// eta(t). Ramp: piecewise {0, t + 1/2, 1}. B-spline: exact closed-form
// antiderivative of M_r (positive-part power rule), no quadrature.
double eval_sigmoidal(const Sigmoidal& s, double t);

// Central B-spline M_r(t); nonnegative, zero outside [-r/2, r/2].
double bspline_value(int order, double t);

// Exact binomial coefficient in integer arithmetic; n <= 20.
unsigned long long binomial(int n, int k);

// Bump phi(t) = eta(t + m) - eta(t - m). Nonnegative, unimodal,
// supported on [-2m, 2m], with phi(t) + phi(t - 2m) = 1 on [0, 2m].
class Activation {
public:
    explicit Activation(Sigmoidal source) : source_(source) {}

    const Sigmoidal& source() const { return source_; }
    double half_support() const { return source_.half_support(); }  // m
    double support() const { return 2.0 * source_.half_support(); } // phi is zero outside [-2m, 2m]

private:
    Sigmoidal source_;
};

// phi(t). Returns exact 0.0 for |t| >= 2m without touching eta, so the
// support boundary carries no cancellation noise.
double eval_activation(const Activation& a, double t);

// Scan settings for discrete_moment: the shifted sum is 1-periodic in t,
// so t runs over [0, window] at the given resolution.
struct MomentScan {
    double resolution = 1e-4;
    double window = 1.0;
};

// Numerical sup over t of sum_k phi(t - k) |t - k|^alpha.
double discrete_moment(const Activation& a, double alpha, MomentScan scan = {});

// Closed-form ceiling (2m)^alpha (floor(4m) + 2) that the scan must respect.
double discrete_moment_bound(const Activation& a, double alpha);

}  // namespace sinno
