#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace sinno {

// One realization of a process, sampled at strictly increasing times
// starting at 0. `seed` records the stream that produced it (0 for
// paths that did not come from a simulator).
struct SamplePath {
    Eigen::ArrayXd times;
    Eigen::ArrayXd values;
    std::uint64_t seed = 0;

    Eigen::Index size() const { return times.size(); }
    double horizon() const { return times.size() > 0 ? times[times.size() - 1] : 0.0; }
};

// Throws InputError unless times/values have equal length >= 1, times
// start at 0 and strictly increase, and every value is finite.
void validate_path(const SamplePath& path);

// Index of the sample time closest to t; ties go to the earlier time.
Eigen::Index nearest_index(const Eigen::Ref<const Eigen::ArrayXd>& times, double t);

}  // namespace sinno
