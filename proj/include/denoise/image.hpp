#pragma once

#include <cstddef>
#include <vector>

namespace denoise {

/// 2-D grayscale raster, row-major, intensities nominally in [0, 1].
///
/// Pixels are stored as doubles so that frequency-domain round trips and
/// order-statistic comparisons are exact. Index formula:
/// pixel(r, c) = pixels()[r * cols() + c].
class Image {
public:
    Image() = default;

    Image(int rows, int cols, double fill = 0.0);

    /// Takes ownership of a row-major pixel buffer of length rows * cols.
    static Image from_pixels(int rows, int cols, std::vector<double> px);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return px_.size(); }

    double& at(int r, int c) noexcept { return px_[idx(r, c)]; }
    double at(int r, int c) const noexcept { return px_[idx(r, c)]; }

    double* row(int r) noexcept { return px_.data() + idx(r, 0); }
    const double* row(int r) const noexcept { return px_.data() + idx(r, 0); }

    std::vector<double>& pixels() noexcept { return px_; }
    const std::vector<double>& pixels() const noexcept { return px_; }

    bool same_size(const Image& other) const noexcept {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    friend bool operator==(const Image&, const Image&) = default;

private:
    std::size_t idx(int r, int c) const noexcept {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> px_;
};

inline double clamp01(double v) noexcept {
    return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

}  // namespace denoise
