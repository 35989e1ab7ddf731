#include "denoise/noise.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace denoise {

double Rng64::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

Image add_gaussian(const Image& image, double mean, double variance, std::uint64_t seed) {
    if (variance < 0.0) {
        throw std::invalid_argument("gaussian variance must be nonnegative, got " +
                                    std::to_string(variance));
    }
    Image out = image;
    const double sigma = std::sqrt(variance);
    Rng64 rng(seed);
    for (double& p : out.pixels()) {
        p = clamp01(p + mean + sigma * rng.normal());
    }
    return out;
}

Image add_salt_pepper(const Image& image, double density, std::uint64_t seed) {
    if (density < 0.0 || density > 1.0) {
        throw std::invalid_argument("salt & pepper density must be in [0, 1], got " +
                                    std::to_string(density));
    }
    Image out = image;
    Rng64 rng(seed);
    const double half = density / 2.0;
    for (double& p : out.pixels()) {
        const double u = rng.uniform01();
        if (u < half) {
            p = 0.0;
        } else if (u < density) {
            p = 1.0;
        }
    }
    return out;
}

Image degrade(const Image& image, const NoiseSpec& spec) {
    Image noisy = add_gaussian(image, spec.gaussian_mean, spec.gaussian_variance, spec.seed);
    return add_salt_pepper(noisy, spec.sp_density, spec.seed + 1);
}

}  // namespace denoise
