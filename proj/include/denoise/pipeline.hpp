#pragma once

#include "denoise/image.hpp"
#include "denoise/parallel.hpp"

namespace denoise {

/// Linear stretch of the intensity range onto [0, 1]; constant images are
/// returned unchanged.
Image contrast_stretch(const Image& image);

struct HybridResult {
    Image image;
    double sigma2 = 0.0;  ///< noise power fed to the Wiener stage
    double t_adaptive = 0.0;  ///< seconds, per stage
    double t_wiener = 0.0;
    double t_stretch = 0.0;
};

/// The full hybrid filter: tiled adaptive median, then the frequency-domain
/// Wiener stage (variance estimated from the stage-1 output, or from the
/// reference when config.estimate_mode is EstimateMode::reference), then a
/// final contrast stretch. stretch_after_each inserts an extra stretch
/// between the median and Wiener stages.
HybridResult hybrid_denoise(const Image& noisy, const FilterConfig& config,
                            const Image* reference = nullptr,
                            bool stretch_after_each = false);

}  // namespace denoise
