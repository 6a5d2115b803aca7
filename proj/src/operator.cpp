#include "sinno/operator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sinno/errors.hpp"

namespace sinno {

UniformGrid::UniformGrid(double horizon, int intervals) : horizon_(horizon), intervals_(intervals) {
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw InputError("grid horizon must be positive and finite");
    }
    if (intervals < 1) {
        throw InputError("grid needs at least one interval, got " + std::to_string(intervals));
    }
    step_ = horizon / static_cast<double>(intervals);
}

SinnoOperator build_operator(const SamplePath& samples, const UniformGrid& grid,
                             const Activation& activation, NodeSampling sampling) {
    validate_path(samples);
    if (samples.horizon() < grid.horizon()) {
        throw InputError("sample path ends at " + std::to_string(samples.horizon()) +
                         " but the grid extends to " + std::to_string(grid.horizon()));
    }

    Eigen::ArrayXd coefficients(grid.node_count());
    const double tolerance = 1e-9 * grid.step();
    for (int k = 0; k < grid.node_count(); ++k) {
        const double node = grid.node(k);
        const Eigen::Index idx = nearest_index(samples.times, node);
        if (sampling == NodeSampling::Exact && std::abs(samples.times[idx] - node) > tolerance) {
            throw AlignmentError("node " + std::to_string(k) + " at t=" + std::to_string(node) +
                                 " has no matching sample (closest is t=" +
                                 std::to_string(samples.times[idx]) + ")");
        }
        coefficients[k] = samples.values[idx];
    }
    return SinnoOperator{grid, activation, std::move(coefficients)};
}

namespace {

double evaluate_at(const SinnoOperator& op, double t) {
    const UniformGrid& grid = op.grid;
    const double scale = op.activation.support() / grid.step();  // 2m / step
    int i = static_cast<int>(std::floor(t / grid.step()));
    i = std::clamp(i, 0, grid.intervals() - 1);
    // Both neighbor terms are always formed; one of them is zero at node
    // points, which M3/M4 make harmless.
    const double left = eval_activation(op.activation, scale * (t - grid.node(i)));
    const double right = eval_activation(op.activation, scale * (t - grid.node(i + 1)));
    return op.coefficients[i] * left + op.coefficients[i + 1] * right;
}

}  // namespace

double evaluate(const SinnoOperator& op, double t) {
    if (!(t >= 0.0) || !(t <= op.grid.horizon())) {
        throw std::domain_error("evaluation time " + std::to_string(t) +
                                " outside [0, " + std::to_string(op.grid.horizon()) + "]");
    }
    return evaluate_at(op, t);
}

Eigen::ArrayXd evaluate_many(const SinnoOperator& op, const Eigen::Ref<const Eigen::ArrayXd>& ts) {
    Eigen::ArrayXd out(ts.size());
    for (Eigen::Index j = 0; j < ts.size(); ++j) {
        const double t = ts[j];
        if (!(t >= 0.0) || !(t <= op.grid.horizon())) {
            throw std::domain_error("evaluation time at index " + std::to_string(j) + " (t=" +
                                    std::to_string(t) + ") outside [0, " +
                                    std::to_string(op.grid.horizon()) + "]");
        }
        if (j > 0 && t < ts[j - 1]) {
            throw InputError("query times must be non-decreasing (index " + std::to_string(j) + ")");
        }
        out[j] = evaluate_at(op, t);
    }
    return out;
}

}  // namespace sinno
