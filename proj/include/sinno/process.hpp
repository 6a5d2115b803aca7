#pragma once

#include <variant>

#include "sinno/rng.hpp"
#include "sinno/sample_path.hpp"

namespace sinno {

// Mean-reverting diffusion dX = theta (mu - X) dt + sigma dW.
struct OuSpec {
    double theta = 0.5;
    double mu = 0.0;
    double sigma = 1.0;
    double x0 = 0.0;
};

// Scaled Brownian motion dX = sigma dW.
struct WienerSpec {
    double sigma = 1.0;
    double x0 = 0.0;
};

using ProcessSpec = std::variant<OuSpec, WienerSpec>;

// Euler-Maruyama on the uniform grid dt = horizon / steps:
//   X_{i+1} = X_i + theta (mu - X_i) dt + sigma sqrt(dt) Z_i.
// Gaussian increments come from the seeded stream, so identical seeds
// reproduce the path bit for bit.
SamplePath simulate_ou(const OuSpec& spec, double horizon, int steps, const SeedSpec& seed);

// X_{i+1} = X_i + sigma sqrt(dt) Z_i.
SamplePath simulate_wiener(const WienerSpec& spec, double horizon, int steps, const SeedSpec& seed);

SamplePath simulate(const ProcessSpec& spec, double horizon, int steps, const SeedSpec& seed);

}  // namespace sinno
