#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "denoise/image.hpp"

namespace denoise {

/// 2-D transform bins in the unnormalized forward convention, row-major:
/// bin (u, v) = sum over (x, y) of pixel(x, y) * exp(-2*pi*i*(u*x/M + v*y/N)).
struct Spectrum {
    int rows = 0;
    int cols = 0;
    std::vector<std::complex<double>> bins;

    std::complex<double>& at(int u, int v) {
        return bins[static_cast<std::size_t>(u) * cols + v];
    }
    std::complex<double> at(int u, int v) const {
        return bins[static_cast<std::size_t>(u) * cols + v];
    }
};

/// Forward transform; handles arbitrary (non-power-of-two) dimensions.
Spectrum dft2_forward(const Image& image);

/// Inverse transform, dividing by rows*cols. Pixels are clamped to [0, 1]
/// only when clamp is set.
Image dft2_inverse(const Spectrum& spectrum, bool clamp = false);

}  // namespace denoise
