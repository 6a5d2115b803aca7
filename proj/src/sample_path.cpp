#include "sinno/sample_path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sinno/errors.hpp"

namespace sinno {

void validate_path(const SamplePath& path) {
    if (path.times.size() == 0) {
        throw InputError("sample path is empty");
    }
    if (path.times.size() != path.values.size()) {
        throw InputError("sample path times/values length mismatch: " +
                         std::to_string(path.times.size()) + " vs " +
                         std::to_string(path.values.size()));
    }
    if (path.times[0] != 0.0) {
        throw InputError("sample path must start at time 0");
    }
    for (Eigen::Index i = 1; i < path.times.size(); ++i) {
        if (!(path.times[i] > path.times[i - 1])) {
            throw InputError("sample path times must strictly increase (index " +
                             std::to_string(i) + ")");
        }
    }
    if (!path.values.isFinite().all()) {
        throw InputError("sample path contains non-finite values");
    }
}

Eigen::Index nearest_index(const Eigen::Ref<const Eigen::ArrayXd>& times, double t) {
    const Eigen::Index n = times.size();
    const double* begin = times.data();
    const double* it = std::lower_bound(begin, begin + n, t);
    if (it == begin) return 0;
    if (it == begin + n) return n - 1;
    const Eigen::Index hi = it - begin;
    const Eigen::Index lo = hi - 1;
    // Gaps equal up to rounding count as a tie, and ties keep the earlier
    // sample; exact comparison would let 1-ulp noise pick the later one.
    const double d_lo = t - times[lo];
    const double d_hi = times[hi] - t;
    const double tol = 4.0 * std::numeric_limits<double>::epsilon() *
                       std::max({std::abs(t), std::abs(times[lo]), std::abs(times[hi])});
    return (d_lo <= d_hi + tol) ? lo : hi;
}

}  // namespace sinno
