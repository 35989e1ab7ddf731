#include "denoise/phantom.hpp"

#include <algorithm>

#include "denoise/noise.hpp"

namespace denoise {

Image make_phantom(int rows, int cols, std::uint64_t seed) {
    Image img(rows, cols);
    const double denom = rows + cols > 2 ? static_cast<double>(rows + cols - 2) : 1.0;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            img.at(r, c) = static_cast<double>(r + c) / denom;
        }
    }

    Rng64 rng(seed);
    const double min_dim = static_cast<double>(std::min(rows, cols));
    for (int d = 0; d < 6; ++d) {
        const double cy = (0.1 + 0.8 * rng.uniform01()) * rows;
        const double cx = (0.1 + 0.8 * rng.uniform01()) * cols;
        const double rad = (0.05 + 0.10 * rng.uniform01()) * min_dim;
        const double val = rng.uniform01();
        const double rad2 = rad * rad;
        for (int r = 0; r < rows; ++r) {
            const double dy = r - cy;
            for (int c = 0; c < cols; ++c) {
                const double dx = c - cx;
                if (dy * dy + dx * dx <= rad2) img.at(r, c) = val;
            }
        }
    }

    // vertical bar grating over the lower third
    const int period = 4 + static_cast<int>(rng.next_u64() % 6);
    const int band_top = rows * 2 / 3;
    const int band_bottom = rows * 5 / 6;
    for (int r = band_top; r < band_bottom; ++r) {
        for (int c = 0; c < cols; ++c) {
            img.at(r, c) = ((c / period) % 2 == 0) ? 0.15 : 0.85;
        }
    }

    const auto [lo_it, hi_it] = std::minmax_element(img.pixels().begin(), img.pixels().end());
    const double lo = *lo_it, hi = *hi_it;
    if (hi > lo) {
        const double scale = 1.0 / (hi - lo);
        for (double& p : img.pixels()) p = (p - lo) * scale;
    }
    return img;
}

}  // namespace denoise
