#pragma once

#include "denoise/image.hpp"

namespace denoise {

/// How the pipeline obtains the noise power for the Wiener stage.
enum class EstimateMode { robust, reference };

/// Where a noise-variance figure came from.
enum class NoiseSource { given, reference, robust };

struct NoiseEstimate {
    double sigma2 = 0.0;  ///< noise variance, intensity^2 units
    NoiseSource source = NoiseSource::given;
};

/// Estimates the noise variance of an image.
///
/// With a reference, sigma2 = mean((image - reference)^2). Without one, the
/// robust estimate sigma = median(|image - median3(image)|) / 0.6745 is used,
/// where median3 is the 3x3 median filter with replicated borders.
NoiseEstimate estimate_noise_variance(const Image& image, const Image* reference = nullptr);

/// Frequency-domain Wiener filter for white noise: per-bin gain
/// (P - N0) / P where P is the bin power and N0 = rows*cols*sigma2,
/// clamped to zero when the noise power dominates. Output pixels are
/// clamped to [0, 1] unless clamp is false.
Image wiener_filter(const Image& image, const NoiseEstimate& noise, bool clamp = true);

}  // namespace denoise
