#pragma once

#include <vector>

#include "denoise/image.hpp"

namespace denoise {

/// Throws std::invalid_argument unless smax is an odd integer > 1.
void validate_smax(int smax);

/// Per-pixel order statistics of the k x k neighborhood of an image,
/// with borders handled by edge replication. zmin <= zmed <= zmax holds
/// elementwise; the median of the k^2 window values is the element at
/// sorted index (k^2 - 1) / 2.
struct WindowStats {
    Image zmin;
    Image zmax;
    Image zmed;
    int k = 0;
};

/// Computes full min/max/median planes for an odd window size k >= 3.
WindowStats window_stats(const Image& image, int k);

/// Adaptive median filter with windows growing 3, 5, ..., smax.
///
/// Per window size, a pixel not yet finalized is finalized when the window
/// median lies strictly between the window min and max (level A); it then
/// keeps its own value if that also lies strictly inside the range (level B),
/// and takes the window median otherwise. Pixels never finalized at smax
/// retain their input value. All window statistics are taken from the
/// original input, never from partially written output, so the result is
/// independent of pixel visit order.
Image adaptive_median_serial(const Image& image, int smax);

namespace detail {

/// Filters rows [row_begin, row_end) of src into dst, which is resized to
/// (row_end - row_begin) x src.cols(). Window coordinates clamp to src's
/// bounds, so edge replication happens only at src's own edges; tile-based
/// callers pass the halo extent as row_begin/row_end and get interior rows
/// evaluated against real neighbor data.
///
/// When finalized_at is non-null it receives, per output pixel, the window
/// size that finalized the pixel (0 for pixels that kept their input value).
void adaptive_median_rows(const Image& src, int smax, int row_begin, int row_end,
                          Image& dst, std::vector<int>* finalized_at = nullptr);

}  // namespace detail

}  // namespace denoise
