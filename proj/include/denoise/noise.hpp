#pragma once

#include <cstdint>
#include <random>

#include "denoise/image.hpp"

namespace denoise {

/// Degradation parameters on the [0, 1] intensity scale.
struct NoiseSpec {
    double gaussian_variance = 0.01;  ///< intensity^2 units
    double gaussian_mean = 0.0;
    double sp_density = 0.05;  ///< fraction of pixels hit by impulses
    std::uint64_t seed = 0;
};

/// Deterministic stream of uniforms and normals.
///
/// Uniforms come from std::mt19937_64 (the 64-bit Mersenne Twister, fully
/// specified by the C++ standard) mapped to [0, 1) by taking the top 53 bits.
/// Normals use the Marsaglia polar transform on that stream, so a given seed
/// reproduces the same draws on any conforming implementation.
class Rng64 {
public:
    explicit Rng64(std::uint64_t seed) : gen_(seed) {}

    /// Uniform draw in [0, 1).
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Standard normal draw.
    double normal();

    std::uint64_t next_u64() { return gen_(); }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Adds i.i.d. normal(mean, variance) noise per pixel, clamped to [0, 1].
/// Identical (image, mean, variance, seed) give identical output.
Image add_gaussian(const Image& image, double mean, double variance, std::uint64_t seed);

/// Each pixel independently becomes 0.0 with probability density/2,
/// 1.0 with probability density/2, else stays unchanged.
Image add_salt_pepper(const Image& image, double density, std::uint64_t seed);

/// Gaussian noise first, then impulses, so impulse pixels end exactly 0 or 1.
/// The impulse stage is seeded with spec.seed + 1.
Image degrade(const Image& image, const NoiseSpec& spec);

}  // namespace denoise
