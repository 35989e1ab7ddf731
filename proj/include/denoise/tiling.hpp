#pragma once

#include <vector>

#include "denoise/image.hpp"

namespace denoise {

/// Horizontal band of an image: it owns rows [core_start, core_start + core_rows)
/// and carries up to `halo` read-only context rows on each side, clamped at the
/// image borders. data holds (halo_above + core_rows + halo_below) x N pixels.
struct Tile {
    int index = 0;
    int core_start = 0;
    int core_rows = 0;
    int halo_above = 0;
    int halo_below = 0;
    Image data;
};

/// Splits an image into `parts` full-width bands of near-equal height
/// (the first M mod parts bands are one row taller), each with up to
/// `halo` context rows per side. Requires 1 <= parts <= image.rows().
std::vector<Tile> split_bands(const Image& image, int parts, int halo);

/// Reassembles an image from tiles whose core ranges exactly partition
/// [0, rows); halo rows are discarded. Throws on overlap or gaps.
Image stitch_bands(const std::vector<Tile>& tiles, int rows, int cols);

}  // namespace denoise
