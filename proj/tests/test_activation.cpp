#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "sinno/activation.hpp"
#include "sinno/errors.hpp"

using namespace sinno;

namespace {

// Test-only quadrature oracle: composite Simpson for the antiderivative
// of M_r, independent of the closed form under test.
double sigmoidal_by_quadrature(int order, double t) {
    const double lo = -0.5 * order;
    if (t <= lo) return 0.0;
    const int panels = 20000;  // even
    const double h = (t - lo) / panels;
    double sum = bspline_value(order, lo) + bspline_value(order, t);
    for (int i = 1; i < panels; ++i) {
        const double weight = (i % 2 == 1) ? 4.0 : 2.0;
        sum += weight * bspline_value(order, lo + i * h);
    }
    return sum * h / 3.0;
}

const std::vector<Sigmoidal> kAllSigmoidals = {
    Sigmoidal::Ramp(),     Sigmoidal::BSpline(2), Sigmoidal::BSpline(3),
    Sigmoidal::BSpline(4), Sigmoidal::BSpline(5),
};

}  // namespace

TEST_CASE("ramp generator: piecewise values") {
    const Sigmoidal ramp = Sigmoidal::Ramp();
    CHECK(eval_sigmoidal(ramp, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(eval_sigmoidal(ramp, 5.0) == 1.0);
    CHECK(eval_sigmoidal(ramp, -5.0) == 0.0);
    CHECK(eval_sigmoidal(ramp, 0.25) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(ramp.half_support() == 0.5);
}

TEST_CASE("B-spline generator: frozen values and saturation") {
    CHECK(eval_sigmoidal(Sigmoidal::BSpline(2), 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(eval_sigmoidal(Sigmoidal::BSpline(3), 1.5) == 1.0);
    CHECK(eval_sigmoidal(Sigmoidal::BSpline(3), -1.5) == 0.0);
    CHECK(Sigmoidal::BSpline(4).half_support() == 2.0);
}

TEST_CASE("B-spline kernel: frozen values") {
    CHECK(bspline_value(2, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(bspline_value(2, 1.0) == 0.0);
    CHECK(bspline_value(2, -1.0) == 0.0);
    CHECK(bspline_value(3, 0.0) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("B-spline kernel: nonnegative with compact support") {
    for (int r = 2; r <= 6; ++r) {
        for (double t = -0.6 * r; t <= 0.6 * r; t += 0.01) {
            const double v = bspline_value(r, t);
            CHECK(v >= 0.0);
            if (std::abs(t) >= 0.5 * r) CHECK(v == 0.0);
        }
    }
}

TEST_CASE("closed-form antiderivative matches quadrature oracle") {
    for (int r : {2, 3, 4, 5}) {
        const Sigmoidal s = Sigmoidal::BSpline(r);
        for (double t = -0.5 * r; t <= 0.5 * r; t += 0.125) {
            CHECK(eval_sigmoidal(s, t) ==
                  doctest::Approx(sigmoidal_by_quadrature(r, t)).epsilon(1e-8));
        }
    }
}

TEST_CASE("invalid construction") {
    CHECK_THROWS_AS(Sigmoidal::BSpline(1), InputError);
    CHECK_THROWS_AS(Sigmoidal::BSpline(0), InputError);
    CHECK_THROWS_AS(Sigmoidal::BSpline(21), InputError);
    CHECK_THROWS_AS(bspline_value(1, 0.0), InputError);
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(20, 10) == 184756ULL);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(4, 5) == 0);
    CHECK_THROWS_AS(binomial(21, 2), InputError);
}

TEST_CASE("generator class conditions on random points") {
    std::mt19937 rng(7);
    for (const Sigmoidal& s : kAllSigmoidals) {
        const double m = s.half_support();
        std::uniform_real_distribution<double> wide(-m - 3.0, m + 3.0);
        double prev_t = -m - 4.0;
        double prev_v = 0.0;
        std::vector<double> ts(200000);
        for (double& t : ts) t = wide(rng);
        std::sort(ts.begin(), ts.end());
        for (double t : ts) {
            const double v = eval_sigmoidal(s, t);
            REQUIRE(v >= 0.0);
            REQUIRE(v <= 1.0);
            if (t <= -m) REQUIRE(v == 0.0);
            if (t >= m) REQUIRE(v == 1.0);
            REQUIRE(v >= prev_v);  // non-decreasing in sorted order
            prev_t = t;
            prev_v = v;
        }
        (void)prev_t;
    }
}

TEST_CASE("activation shape properties M1-M4 on a dense grid") {
    for (const Sigmoidal& s : kAllSigmoidals) {
        const Activation a(s);
        const double m = a.half_support();
        const double reach = 2.0 * m + 1.0;
        double prev = 0.0;
        bool first = true;
        for (double t = -reach; t <= 0.0; t += 1e-3) {
            const double v = eval_activation(a, t);
            REQUIRE(v >= 0.0);                          // M1
            if (!first) REQUIRE(v >= prev - 1e-12);     // M2, rising side
            prev = v;
            first = false;
        }
        first = true;
        for (double t = 0.0; t <= reach; t += 1e-3) {
            const double v = eval_activation(a, t);
            REQUIRE(v >= 0.0);
            if (!first) REQUIRE(v <= prev + 1e-12);     // M2, falling side
            if (std::abs(t) >= 2.0 * m) REQUIRE(v == 0.0);  // M3
            prev = v;
            first = false;
        }
        for (double t = 0.0; t <= 2.0 * m; t += 1e-3) {
            REQUIRE(std::abs(eval_activation(a, t) + eval_activation(a, t - 2.0 * m) - 1.0) <=
                    1e-12);  // M4
        }
    }
}

TEST_CASE("ramp activation is the unit hat") {
    const Activation hat(Sigmoidal::Ramp());
    CHECK(eval_activation(hat, 0.0) == 1.0);
    CHECK(eval_activation(hat, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(eval_activation(hat, -0.5) == doctest::Approx(0.5).epsilon(1e-15));
    for (double t = -1.0; t <= 1.0; t += 0.01) {
        CHECK(eval_activation(hat, t) == doctest::Approx(1.0 - std::abs(t)).epsilon(1e-14));
    }
    CHECK(eval_activation(hat, 1.0) == 0.0);   // t = 2m
    CHECK(eval_activation(hat, -1.0) == 0.0);
}

TEST_CASE("support boundary returns exact zero for every activation") {
    for (const Sigmoidal& s : kAllSigmoidals) {
        const Activation a(s);
        CHECK(eval_activation(a, a.support()) == 0.0);
        CHECK(eval_activation(a, -a.support()) == 0.0);
        CHECK(eval_activation(a, a.support() + 0.7) == 0.0);
    }
}

TEST_CASE("discrete moment: ramp order zero sums the hat shifts to one") {
    const Activation hat(Sigmoidal::Ramp());
    const double moment = discrete_moment(hat, 0.0);
    CHECK(moment == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(moment <= discrete_moment_bound(hat, 0.0));  // 1 <= floor(2) + 2 = 4
    CHECK(discrete_moment_bound(hat, 0.0) == 4.0);
}

TEST_CASE("discrete moment respects the closed-form ceiling") {
    for (const Sigmoidal& s : kAllSigmoidals) {
        const Activation a(s);
        for (double alpha : {0.0, 1.0, 2.0}) {
            const double moment = discrete_moment(a, alpha);
            CHECK(moment <= discrete_moment_bound(a, alpha));
            CHECK(moment >= 0.0);
        }
    }
    // Spot value: order-4 spline (m = 2), alpha = 1 stays under (2m)(floor(8)+2).
    const Activation quartic(Sigmoidal::BSpline(4));
    CHECK(discrete_moment(quartic, 1.0) <= 40.0);
}

TEST_CASE("discrete moment input checks") {
    const Activation hat(Sigmoidal::Ramp());
    CHECK_THROWS_AS(discrete_moment(hat, 0.0, MomentScan{0.0, 1.0}), InputError);
    CHECK_THROWS_AS(discrete_moment(hat, -1.0), InputError);
}
