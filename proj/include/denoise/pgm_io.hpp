#pragma once

#include <filesystem>

#include "denoise/image.hpp"

namespace denoise {

/// Reads a binary (P5) or ASCII (P2) PGM file, maxval up to 65535.
/// Samples are divided by maxval so pixels land in [0, 1].
/// Throws std::runtime_error naming the offending element on malformed input.
Image load_pgm(const std::filesystem::path& path);

/// Writes binary P5 with maxval 255. Each pixel is quantized as
/// round(p * 255) with halves rounded away from zero.
void save_pgm(const Image& image, const std::filesystem::path& path);

}  // namespace denoise
