#include "sinno/activation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sinno/errors.hpp"

namespace sinno {

namespace {
constexpr int kMaxOrder = 20;  // binomial() stays exact in 64-bit up to here
}

Sigmoidal Sigmoidal::Ramp() { return Sigmoidal(SigmoidalKind::Ramp, 0, 0.5); }

Sigmoidal Sigmoidal::BSpline(int order) {
    if (order < 2) {
        throw InputError("B-spline sigmoidal requires order >= 2, got " + std::to_string(order));
    }
    if (order > kMaxOrder) {
        throw InputError("B-spline sigmoidal order capped at " + std::to_string(kMaxOrder) +
                         ", got " + std::to_string(order));
    }
    return Sigmoidal(SigmoidalKind::BSpline, order, 0.5 * order);
}

unsigned long long binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n > kMaxOrder) {
        throw InputError("binomial supports n <= " + std::to_string(kMaxOrder));
    }
    k = std::min(k, n - k);
    unsigned long long result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
    }
    return result;
}

namespace {

double positive_part_pow(double t, int p) {
    if (t <= 0.0) return 0.0;
    double result = 1.0;
    for (int i = 0; i < p; ++i) result *= t;
    return result;
}

double factorial(int n) {
    double result = 1.0;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

// Antiderivative of M_r: (1/r!) sum_j (-1)^j C(r,j) (r/2 + t - j)_+^r.
// The alternating sum is well-conditioned on t <= 0 but cancels badly as
// it approaches 1, so the right half is evaluated through the symmetry
// eta(t) = 1 - eta(-t); that keeps eta monotone to rounding and exact at
// the saturation edges.
double bspline_sigmoidal(int r, double t) {
    const double m = 0.5 * r;
    if (t <= -m) return 0.0;
    if (t >= m) return 1.0;
    if (t > 0.0) return 1.0 - bspline_sigmoidal(r, -t);
    double sum = 0.0;
    for (int j = 0; j <= r; ++j) {
        const double term = static_cast<double>(binomial(r, j)) * positive_part_pow(m + t - j, r);
        sum += (j % 2 == 0) ? term : -term;
    }
    return std::clamp(sum / factorial(r), 0.0, 1.0);
}

}  // namespace

double bspline_value(int order, double t) {
    if (order < 2) {
        throw InputError("bspline_value requires order >= 2, got " + std::to_string(order));
    }
    if (order > kMaxOrder) {
        throw InputError("bspline_value order capped at " + std::to_string(kMaxOrder));
    }
    const double m = 0.5 * order;
    if (t <= -m || t >= m) return 0.0;
    double sum = 0.0;
    for (int j = 0; j <= order; ++j) {
        const double term =
            static_cast<double>(binomial(order, j)) * positive_part_pow(m + t - j, order - 1);
        sum += (j % 2 == 0) ? term : -term;
    }
    return std::max(0.0, sum / factorial(order - 1));
}

double eval_sigmoidal(const Sigmoidal& s, double t) {
    switch (s.kind()) {
        case SigmoidalKind::Ramp:
            if (t <= -0.5) return 0.0;
            if (t >= 0.5) return 1.0;
            return t + 0.5;
        case SigmoidalKind::BSpline:
            return bspline_sigmoidal(s.order(), t);
    }
    return 0.0;  // unreachable
}

double eval_activation(const Activation& a, double t) {
    const double m = a.half_support();
    if (t <= -2.0 * m || t >= 2.0 * m) return 0.0;
    // The difference of two eta values can round to -1 ulp; M1 says >= 0.
    return std::max(0.0, eval_sigmoidal(a.source(), t + m) - eval_sigmoidal(a.source(), t - m));
}

double discrete_moment(const Activation& a, double alpha, MomentScan scan) {
    if (!(scan.resolution > 0.0)) {
        throw InputError("discrete_moment scan resolution must be positive");
    }
    if (alpha < 0.0) {
        throw InputError("discrete_moment order alpha must be nonnegative");
    }
    const double reach = a.support();  // only |t - k| < 2m contributes
    double sup = 0.0;
    const long steps = std::lround(scan.window / scan.resolution);
    for (long i = 0; i <= steps; ++i) {
        const double t = static_cast<double>(i) * scan.resolution;
        const long k_lo = static_cast<long>(std::ceil(t - reach));
        const long k_hi = static_cast<long>(std::floor(t + reach));
        double sum = 0.0;
        for (long k = k_lo; k <= k_hi; ++k) {
            const double gap = t - static_cast<double>(k);
            const double weight = eval_activation(a, gap);
            if (weight == 0.0) continue;
            sum += weight * std::pow(std::abs(gap), alpha);
        }
        sup = std::max(sup, sum);
    }
    return sup;
}

double discrete_moment_bound(const Activation& a, double alpha) {
    const double m = a.half_support();
    return std::pow(2.0 * m, alpha) * (std::floor(4.0 * m) + 2.0);
}

}  // namespace sinno
