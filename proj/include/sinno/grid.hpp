#pragma once

namespace sinno {

// n + 1 equally spaced nodes k * (horizon / n) on [0, horizon].
class UniformGrid {
public:
    UniformGrid(double horizon, int intervals);

    double horizon() const { return horizon_; }
    int intervals() const { return intervals_; }      // n
    int node_count() const { return intervals_ + 1; } // n + 1
    double step() const { return step_; }             // horizon / n
    // Last node pinned to the horizon so k * step rounding can't push it past.
    double node(int k) const {
        return k == intervals_ ? horizon_ : static_cast<double>(k) * step_;
    }

private:
    double horizon_;
    int intervals_;
    double step_;
};

}  // namespace sinno
