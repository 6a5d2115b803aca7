#pragma once

#include <Eigen/Core>

#include "sinno/activation.hpp"
#include "sinno/grid.hpp"
#include "sinno/sample_path.hpp"

namespace sinno {

// Interpolant S(t) = sum_k c_k phi((2m/step)(t - t_k)) on a uniform grid.
// The scaled argument has magnitude 2m |t - t_k| / step, so phi vanishes
// for every node farther than one step from t: only the two neighbors of
// t ever contribute, whatever the activation's half-support m.
struct SinnoOperator {
    UniformGrid grid;
    Activation activation;
    Eigen::ArrayXd coefficients;  // length grid.node_count()
};

enum class NodeSampling {
    Exact,    // every node must coincide with a sample time (1e-9 * step)
    Nearest,  // take the closest sample; ties go to the earlier time
};

// Reads the node coefficients off a sample path.
SinnoOperator build_operator(const SamplePath& samples, const UniformGrid& grid,
                             const Activation& activation,
                             NodeSampling sampling = NodeSampling::Exact);

// S(t) for t in [0, horizon]; throws std::domain_error outside. O(1):
// evaluates the two neighbor terms i = floor(t/step) clamped to
// [0, n-1] and i + 1, which is the whole sum by compact support.
double evaluate(const SinnoOperator& op, double t);

// Elementwise evaluate over a non-decreasing array of query times.
Eigen::ArrayXd evaluate_many(const SinnoOperator& op, const Eigen::Ref<const Eigen::ArrayXd>& ts);

}  // namespace sinno
