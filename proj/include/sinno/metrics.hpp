#pragma once

#include <vector>

#include "sinno/operator.hpp"
#include "sinno/process.hpp"

namespace sinno {

// Monte-Carlo error summary for one node parameter n.
struct MseReport {
    int n = 0;
    double mse_nodes = 0.0;       // mean over realizations; identically ~0
    double mse_query = 0.0;       // mean squared error at the query point
    double mse_query_std = 0.0;   // sample std of the per-realization query MSE
    double query_point = 0.0;
    double mse_global = 0.0;      // mean of (1/T) integral of squared error
    int realizations = 0;
};

// Empirical modulus of continuity at gap h.
struct ModulusEstimate {
    double h = 0.0;
    double w = 0.0;           // max ensemble-mean squared increment
    long pairs_used = 0;      // grid pairs with 0 < |t - s| <= h
    double se = 0.0;          // standard error of the mean at the maximizing pair
};

// Power-law fit mse ~ C (T/n)^alpha from a log-log least squares.
struct RateFit {
    double alpha_hat = 0.0;
    double c_hat = 0.0;
    double r_squared = 0.0;
    int points_used = 0;
};

// Mean squared node error (1/(n+1)) sum_k (path(t_k) - S(t_k))^2, with
// path(t_k) read at the nearest sample time. Zero for exact-mode operators.
double mse_nodes(const SinnoOperator& op, const SamplePath& path);

// Squared error at the query point for this one realization. Both the
// path value and the operator are read at the sample time nearest t_q.
double mse_query(const SinnoOperator& op, const SamplePath& path, double t_q);

// (1/T) times the trapezoid-rule integral of the squared error over the
// path's own sample grid.
double mse_global(const SinnoOperator& op, const SamplePath& path);

struct SweepConfig {
    std::vector<int> ns;
    int realizations = 3;
    double t_q = 3.7;
    double horizon = 10.0;
    int fine_steps = 1000;
    std::uint64_t base_seed = 0;
};

// For each n: simulate `realizations` paths on streams 1..R, build one
// operator per path (exact-mode when the nodes land on the fine grid,
// nearest otherwise), and average the three MSEs over the realizations.
std::vector<MseReport> mc_sweep(const ProcessSpec& process, const Activation& activation,
                                const SweepConfig& config);

// Max over fine-grid pairs (t, s), 0 < |t - s| <= h, of the ensemble
// mean of (X_t - X_s)^2. All paths must share one time grid and h must
// be at least the grid step.
ModulusEstimate modulus_estimate(const std::vector<SamplePath>& ensemble, double h);

// Least squares on log(mse) = log(C T^alpha) - alpha log(n). Points with
// mse <= 0 are dropped; fewer than 3 survivors is an error.
RateFit rate_fit(const std::vector<std::pair<int, double>>& points, double horizon = 1.0);

// Chebyshev ceiling mse / epsilon^2 on P(|S_n - X| >= epsilon).
double chebyshev_bound_check(double mse, double epsilon);

}  // namespace sinno
