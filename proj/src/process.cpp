#include "sinno/process.hpp"

#include <cmath>
#include <string>

#include "sinno/errors.hpp"

namespace sinno {

namespace {

void check_horizon(double horizon, int steps) {
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw InputError("simulation horizon must be positive and finite");
    }
    if (steps < 2) {
        throw InputError("simulation needs at least 2 steps, got " + std::to_string(steps));
    }
}

Eigen::ArrayXd time_grid(double horizon, int steps) {
    return Eigen::ArrayXd::LinSpaced(steps + 1, 0.0, horizon);
}

}  // namespace

SamplePath simulate_ou(const OuSpec& spec, double horizon, int steps, const SeedSpec& seed) {
    check_horizon(horizon, steps);
    if (!std::isfinite(spec.theta) || !std::isfinite(spec.mu) || !std::isfinite(spec.sigma) ||
        !std::isfinite(spec.x0)) {
        throw InputError("OU parameters must be finite");
    }
    if (!(spec.theta > 0.0)) {
        throw InputError("OU mean-reversion rate theta must be positive");
    }
    if (spec.sigma < 0.0) {
        throw InputError("OU volatility sigma must be nonnegative");
    }

    const double dt = horizon / static_cast<double>(steps);
    const double noise_scale = spec.sigma * std::sqrt(dt);
    NormalStream normals(seed);

    SamplePath path;
    path.times = time_grid(horizon, steps);
    path.values.resize(steps + 1);
    path.seed = derive_stream_seed(seed);
    double x = spec.x0;
    path.values[0] = x;
    for (int i = 0; i < steps; ++i) {
        x += spec.theta * (spec.mu - x) * dt + noise_scale * normals.next();
        path.values[i + 1] = x;
    }
    return path;
}

SamplePath simulate_wiener(const WienerSpec& spec, double horizon, int steps, const SeedSpec& seed) {
    check_horizon(horizon, steps);
    if (!std::isfinite(spec.sigma) || !std::isfinite(spec.x0)) {
        throw InputError("Wiener parameters must be finite");
    }
    if (spec.sigma < 0.0) {
        throw InputError("Wiener volatility sigma must be nonnegative");
    }

    const double dt = horizon / static_cast<double>(steps);
    const double noise_scale = spec.sigma * std::sqrt(dt);
    NormalStream normals(seed);

    SamplePath path;
    path.times = time_grid(horizon, steps);
    path.values.resize(steps + 1);
    path.seed = derive_stream_seed(seed);
    double x = spec.x0;
    path.values[0] = x;
    for (int i = 0; i < steps; ++i) {
        x += noise_scale * normals.next();
        path.values[i + 1] = x;
    }
    return path;
}

SamplePath simulate(const ProcessSpec& spec, double horizon, int steps, const SeedSpec& seed) {
    if (const auto* ou = std::get_if<OuSpec>(&spec)) {
        return simulate_ou(*ou, horizon, steps, seed);
    }
    return simulate_wiener(std::get<WienerSpec>(spec), horizon, steps, seed);
}

}  // namespace sinno
