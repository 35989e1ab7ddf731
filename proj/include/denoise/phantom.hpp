#pragma once

#include <cstdint>

#include "denoise/image.hpp"

namespace denoise {

/// Synthetic grayscale test image: a diagonal gradient with seeded disks and
/// a bar grating, min-max normalized so the full [0, 1] range is attained.
/// Deterministic for a given (rows, cols, seed).
Image make_phantom(int rows, int cols, std::uint64_t seed);

}  // namespace denoise
