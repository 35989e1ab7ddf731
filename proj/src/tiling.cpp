#include "denoise/tiling.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <string>

namespace denoise {

std::vector<Tile> split_bands(const Image& image, int parts, int halo) {
    const int rows = image.rows();
    const int cols = image.cols();
    if (parts < 1 || parts > rows) {
        throw std::invalid_argument("parts must be in [1, " + std::to_string(rows) +
                                    "], got " + std::to_string(parts));
    }
    if (halo < 0) {
        throw std::invalid_argument("halo must be nonnegative, got " + std::to_string(halo));
    }

    std::vector<Tile> tiles;
    tiles.reserve(static_cast<std::size_t>(parts));
    const int base = rows / parts;
    const int extra = rows % parts;
    int start = 0;
    for (int i = 0; i < parts; ++i) {
        Tile t;
        t.index = i;
        t.core_start = start;
        t.core_rows = base + (i < extra ? 1 : 0);
        t.halo_above = std::min(halo, t.core_start);
        t.halo_below = std::min(halo, rows - t.core_start - t.core_rows);

        const int first = t.core_start - t.halo_above;
        const int height = t.halo_above + t.core_rows + t.halo_below;
        t.data = Image(height, cols);
        for (int r = 0; r < height; ++r) {
            std::memcpy(t.data.row(r), image.row(first + r),
                        static_cast<std::size_t>(cols) * sizeof(double));
        }
        start += t.core_rows;
        tiles.push_back(std::move(t));
    }
    return tiles;
}

Image stitch_bands(const std::vector<Tile>& tiles, int rows, int cols) {
    Image out(rows, cols);
    std::vector<char> owned(static_cast<std::size_t>(rows), 0);
    for (const Tile& t : tiles) {
        if (t.core_start < 0 || t.core_rows < 1 || t.core_start + t.core_rows > rows) {
            throw std::invalid_argument("tile " + std::to_string(t.index) +
                                        " core range outside [0, " + std::to_string(rows) + ")");
        }
        if (t.data.cols() != cols ||
            t.data.rows() != t.halo_above + t.core_rows + t.halo_below) {
            throw std::invalid_argument("tile " + std::to_string(t.index) +
                                        " data dimensions inconsistent with its fields");
        }
        for (int r = 0; r < t.core_rows; ++r) {
            const int dst = t.core_start + r;
            if (owned[static_cast<std::size_t>(dst)]) {
                throw std::invalid_argument("row " + std::to_string(dst) +
                                            " owned by more than one tile");
            }
            owned[static_cast<std::size_t>(dst)] = 1;
            std::memcpy(out.row(dst), t.data.row(t.halo_above + r),
                        static_cast<std::size_t>(cols) * sizeof(double));
        }
    }
    for (int r = 0; r < rows; ++r) {
        if (!owned[static_cast<std::size_t>(r)]) {
            throw std::invalid_argument("row " + std::to_string(r) + " not owned by any tile");
        }
    }
    return out;
}

}  // namespace denoise
