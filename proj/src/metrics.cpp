#include "sinno/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sinno/errors.hpp"

namespace sinno {

double mse_nodes(const SinnoOperator& op, const SamplePath& path) {
    validate_path(path);
    if (path.horizon() < op.grid.horizon()) {
        throw InputError("path does not cover the operator grid");
    }
    double sum = 0.0;
    for (int k = 0; k < op.grid.node_count(); ++k) {
        const double node = op.grid.node(k);
        const double truth = path.values[nearest_index(path.times, node)];
        const double diff = truth - evaluate(op, node);
        sum += diff * diff;
    }
    return sum / static_cast<double>(op.grid.node_count());
}

double mse_query(const SinnoOperator& op, const SamplePath& path, double t_q) {
    validate_path(path);
    if (!(t_q > 0.0) || !(t_q < op.grid.horizon())) {
        throw std::domain_error("query point " + std::to_string(t_q) +
                                " outside (0, " + std::to_string(op.grid.horizon()) + ")");
    }
    // Snap to the nearest fine-grid sample and compare both sides there.
    Eigen::Index idx = nearest_index(path.times, t_q);
    while (idx > 0 && path.times[idx] > op.grid.horizon()) {
        --idx;  // paths may extend past the grid; stay inside the domain
    }
    const double snapped = path.times[idx];
    const double diff = path.values[idx] - evaluate(op, snapped);
    return diff * diff;
}

double mse_global(const SinnoOperator& op, const SamplePath& path) {
    validate_path(path);
    if (path.size() < 2) {
        throw InputError("global MSE needs at least 2 fine-grid points");
    }
    if (path.horizon() < op.grid.horizon()) {
        throw InputError("path does not cover the operator grid");
    }
    // Samples past the grid horizon (if any) are outside the operator's
    // domain and are excluded from the integral.
    const double* begin = path.times.data();
    const Eigen::Index count =
        std::upper_bound(begin, begin + path.size(), op.grid.horizon()) - begin;
    if (count < 2) {
        throw InputError("global MSE needs at least 2 fine-grid points inside the grid");
    }
    const Eigen::ArrayXd times = path.times.head(count);
    const Eigen::ArrayXd reconstructed = evaluate_many(op, times);
    const Eigen::ArrayXd sq = (path.values.head(count) - reconstructed).square();
    const Eigen::ArrayXd widths = times.tail(count - 1) - times.head(count - 1);
    const double integral = (0.5 * widths * (sq.head(count - 1) + sq.tail(count - 1))).sum();
    return integral / op.grid.horizon();
}

std::vector<MseReport> mc_sweep(const ProcessSpec& process, const Activation& activation,
                                const SweepConfig& config) {
    if (config.ns.empty()) {
        throw InputError("sweep needs at least one node parameter n");
    }
    if (config.realizations < 1) {
        throw InputError("sweep needs at least one realization");
    }

    const int R = config.realizations;
    const std::size_t n_count = config.ns.size();
    std::vector<MseReport> reports(n_count);
    std::vector<std::vector<double>> query_samples(n_count);
    for (std::size_t j = 0; j < n_count; ++j) {
        reports[j].n = config.ns[j];
        reports[j].query_point = config.t_q;
        reports[j].realizations = R;
        query_samples[j].reserve(R);
    }

    for (int r = 1; r <= R; ++r) {
        const SamplePath path = simulate(process, config.horizon,
                                         config.fine_steps,
                                         SeedSpec{config.base_seed, static_cast<std::uint64_t>(r)});
        for (std::size_t j = 0; j < n_count; ++j) {
            const int n = config.ns[j];
            try {
                const UniformGrid grid(config.horizon, n);
                const NodeSampling sampling =
                    (config.fine_steps % n == 0) ? NodeSampling::Exact : NodeSampling::Nearest;
                const SinnoOperator op = build_operator(path, grid, activation, sampling);
                reports[j].mse_nodes += mse_nodes(op, path);
                reports[j].mse_global += mse_global(op, path);
                query_samples[j].push_back(mse_query(op, path, config.t_q));
            } catch (const std::exception& e) {
                throw InputError("sweep failed at n=" + std::to_string(n) + ": " + e.what());
            }
        }
    }

    for (std::size_t j = 0; j < n_count; ++j) {
        reports[j].mse_nodes /= R;
        reports[j].mse_global /= R;
        const std::vector<double>& qs = query_samples[j];
        double mean = 0.0;
        for (double q : qs) mean += q;
        mean /= R;
        reports[j].mse_query = mean;
        double var = 0.0;
        for (double q : qs) var += (q - mean) * (q - mean);
        reports[j].mse_query_std = R > 1 ? std::sqrt(var / (R - 1)) : 0.0;
    }
    return reports;
}

ModulusEstimate modulus_estimate(const std::vector<SamplePath>& ensemble, double h) {
    if (ensemble.empty()) {
        throw InputError("modulus estimate needs a non-empty ensemble");
    }
    const Eigen::ArrayXd& times = ensemble.front().times;
    const Eigen::Index n = times.size();
    if (n < 2) {
        throw InputError("modulus estimate needs at least 2 grid points");
    }
    for (const SamplePath& path : ensemble) {
        validate_path(path);
        if (path.times.size() != n || (path.times != times).any()) {
            throw InputError("all ensemble paths must share one time grid");
        }
    }
    const double min_gap = (times.tail(n - 1) - times.head(n - 1)).minCoeff();
    if (!(h >= min_gap)) {
        throw InputError("gap h=" + std::to_string(h) +
                         " is below the grid resolution " + std::to_string(min_gap));
    }

    const std::size_t paths = ensemble.size();
    Eigen::MatrixXd values(static_cast<Eigen::Index>(paths), n);
    for (std::size_t p = 0; p < paths; ++p) {
        values.row(static_cast<Eigen::Index>(p)) = ensemble[p].values.transpose();
    }

    ModulusEstimate estimate;
    estimate.h = h;
    Eigen::ArrayXd best_sq;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n && times[j] - times[i] <= h; ++j) {
            const Eigen::ArrayXd sq = (values.col(i) - values.col(j)).array().square();
            const double mean = sq.mean();
            ++estimate.pairs_used;
            if (mean > estimate.w) {
                estimate.w = mean;
                best_sq = sq;
            }
        }
    }
    if (best_sq.size() > 0 && paths > 1) {
        const double var = (best_sq - estimate.w).square().sum() / static_cast<double>(paths - 1);
        estimate.se = std::sqrt(var / static_cast<double>(paths));
    }
    return estimate;
}

RateFit rate_fit(const std::vector<std::pair<int, double>>& points, double horizon) {
    std::vector<std::pair<double, double>> logs;  // (log n, log mse)
    for (const auto& [n, mse] : points) {
        if (mse > 0.0 && n > 0) {
            logs.emplace_back(std::log(static_cast<double>(n)), std::log(mse));
        }
    }
    if (logs.size() < 3) {
        throw InputError("rate fit needs at least 3 points with positive mse, got " +
                         std::to_string(logs.size()));
    }

    const double count = static_cast<double>(logs.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (const auto& [x, y] : logs) {
        mean_x += x;
        mean_y += y;
    }
    mean_x /= count;
    mean_y /= count;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto& [x, y] : logs) {
        sxx += (x - mean_x) * (x - mean_x);
        sxy += (x - mean_x) * (y - mean_y);
        syy += (y - mean_y) * (y - mean_y);
    }
    if (sxx == 0.0) {
        throw InputError("rate fit needs at least 2 distinct n values");
    }
    const double slope = sxy / sxx;
    const double intercept = mean_y - slope * mean_x;

    RateFit fit;
    fit.points_used = static_cast<int>(logs.size());
    fit.alpha_hat = -slope;  // log mse = log(C T^alpha) - alpha log n
    fit.c_hat = std::exp(intercept) / std::pow(horizon, fit.alpha_hat);
    if (syy == 0.0) {
        fit.r_squared = 1.0;  // all residuals vanish on a constant target
    } else {
        double ss_res = 0.0;
        for (const auto& [x, y] : logs) {
            const double resid = y - (intercept + slope * x);
            ss_res += resid * resid;
        }
        fit.r_squared = 1.0 - ss_res / syy;
    }
    return fit;
}

double chebyshev_bound_check(double mse, double epsilon) {
    if (!(epsilon > 0.0)) {
        throw InputError("Chebyshev bound needs epsilon > 0");
    }
    return mse / (epsilon * epsilon);
}

}  // namespace sinno
