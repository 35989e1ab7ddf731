#include "denoise/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

#include "denoise/wiener.hpp"

namespace denoise {

Image contrast_stretch(const Image& image) {
    const auto [lo_it, hi_it] =
        std::minmax_element(image.pixels().begin(), image.pixels().end());
    const double lo = *lo_it, hi = *hi_it;
    if (hi == lo) return image;
    Image out = image;
    // Divide rather than multiply by a reciprocal so the extremes map to
    // exactly 0 and 1.
    const double range = hi - lo;
    for (double& p : out.pixels()) p = (p - lo) / range;
    return out;
}

HybridResult hybrid_denoise(const Image& noisy, const FilterConfig& config,
                            const Image* reference, bool stretch_after_each) {
    validate_config(config);
    if (config.estimate_mode == EstimateMode::reference && reference == nullptr) {
        throw std::invalid_argument("reference mode requires a reference image");
    }
    if (reference && !noisy.same_size(*reference)) {
        throw std::invalid_argument("reference image dimensions do not match");
    }

    HybridResult result;

    auto [filtered, t_adaptive] =
        timed_run([&] { return adaptive_median_parallel(noisy, config); });
    result.t_adaptive = t_adaptive;

    if (stretch_after_each) {
        auto [stretched, t] = timed_run([&] { return contrast_stretch(filtered); });
        filtered = std::move(stretched);
        result.t_stretch += t;
    }

    auto [denoised, t_wiener] = timed_run([&] {
        const NoiseEstimate estimate =
            config.estimate_mode == EstimateMode::reference
                ? estimate_noise_variance(filtered, reference)
                : estimate_noise_variance(filtered);
        result.sigma2 = estimate.sigma2;
        return wiener_filter(filtered, estimate);
    });
    result.t_wiener = t_wiener;

    auto [stretched, t_stretch] = timed_run([&] { return contrast_stretch(denoised); });
    result.t_stretch += t_stretch;
    result.image = std::move(stretched);
    return result;
}

}  // namespace denoise
