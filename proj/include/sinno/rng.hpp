#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace sinno {

// SplitMix64 finalizer. Bijective on 64-bit integers, good avalanche.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Identifies one realization: a base seed plus the realization number.
struct SeedSpec {
    std::uint64_t base_seed = 0;
    std::uint64_t stream_index = 0;
};

// Child seed for one stream. Two rounds of mixing so that nearby
// (base_seed, stream_index) pairs land far apart in seed space.
inline std::uint64_t derive_stream_seed(const SeedSpec& seed) {
    return splitmix64(splitmix64(seed.base_seed) ^ splitmix64(seed.stream_index + 0x51AFD6ED558CCD15ULL));
}

// Standard normal draws with a fully specified transform:
// mt19937_64 words are mapped to doubles u1 in (0,1], u2 in [0,1) by
// taking the top 53 bits, and each pair becomes two draws via Box-Muller
//   z0 = sqrt(-2 ln u1) cos(2*pi*u2),  z1 = sqrt(-2 ln u1) sin(2*pi*u2).
// mt19937_64 output is pinned by the standard, so identical seeds give
// bit-identical draw sequences on every platform.
class NormalStream {
public:
    explicit NormalStream(const SeedSpec& seed) : engine_(derive_stream_seed(seed)) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
        const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;          // [0, 1)
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * 3.141592653589793238462643383279502884 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace sinno
