#include "denoise/adaptive_median.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>

namespace denoise {

void validate_smax(int smax) {
    if (smax <= 1 || smax % 2 == 0) {
        throw std::invalid_argument("smax must be an odd integer > 1, got " +
                                    std::to_string(smax));
    }
}

namespace {

// Horizontal running min/max with clamped columns. Duplicates introduced by
// clamping cannot change a min or max, so scanning the clamped index range
// once is enough.
void row_minmax(const double* src, int n, int radius, double* mn, double* mx) {
    for (int c = 0; c < n; ++c) {
        const int lo = std::max(0, c - radius);
        const int hi = std::min(n - 1, c + radius);
        double a = src[lo], b = src[lo];
        for (int cc = lo + 1; cc <= hi; ++cc) {
            const double v = src[cc];
            if (v < a) a = v;
            if (v > b) b = v;
        }
        mn[c] = a;
        mx[c] = b;
    }
}

// Gathers the k x k window centered at (r, c) of src, indices clamped to the
// image bounds (edge replication keeps the window at exactly k^2 entries).
void gather_window(const Image& src, int r, int c, int radius, std::vector<double>& buf) {
    const int rows = src.rows(), cols = src.cols();
    buf.clear();
    for (int dr = -radius; dr <= radius; ++dr) {
        const int rr = std::clamp(r + dr, 0, rows - 1);
        const double* row = src.row(rr);
        for (int dc = -radius; dc <= radius; ++dc) {
            buf.push_back(row[std::clamp(c + dc, 0, cols - 1)]);
        }
    }
}

double median_of(std::vector<double>& buf) {
    auto mid = buf.begin() + static_cast<std::ptrdiff_t>((buf.size() - 1) / 2);
    std::nth_element(buf.begin(), mid, buf.end());
    return *mid;
}

// Min/max planes of the k x k window for src rows [row_begin, row_end).
// zmin/zmax are (row_end - row_begin) x N.
void window_minmax_rows(const Image& src, int radius, int row_begin, int row_end,
                        Image& zmin, Image& zmax) {
    const int rows = src.rows(), cols = src.cols();
    const int out_rows = row_end - row_begin;
    const int slab_first = std::max(0, row_begin - radius);
    const int slab_last = std::min(rows - 1, row_end - 1 + radius);
    const int slab_rows = slab_last - slab_first + 1;

    Image hmin(slab_rows, cols), hmax(slab_rows, cols);
    for (int e = 0; e < slab_rows; ++e) {
        row_minmax(src.row(slab_first + e), cols, radius, hmin.row(e), hmax.row(e));
    }

    zmin = Image(out_rows, cols);
    zmax = Image(out_rows, cols);
    for (int r = 0; r < out_rows; ++r) {
        const int ro = row_begin + r;
        const int lo = std::max(0, ro - radius) - slab_first;
        const int hi = std::min(rows - 1, ro + radius) - slab_first;
        double* mn = zmin.row(r);
        double* mx = zmax.row(r);
        std::memcpy(mn, hmin.row(lo), static_cast<std::size_t>(cols) * sizeof(double));
        std::memcpy(mx, hmax.row(lo), static_cast<std::size_t>(cols) * sizeof(double));
        for (int e = lo + 1; e <= hi; ++e) {
            const double* rn = hmin.row(e);
            const double* rx = hmax.row(e);
            for (int c = 0; c < cols; ++c) {
                if (rn[c] < mn[c]) mn[c] = rn[c];
                if (rx[c] > mx[c]) mx[c] = rx[c];
            }
        }
    }
}

}  // namespace

WindowStats window_stats(const Image& image, int k) {
    if (k < 3 || k % 2 == 0) {
        throw std::invalid_argument("window size must be an odd integer >= 3, got " +
                                    std::to_string(k));
    }
    const int radius = (k - 1) / 2;
    WindowStats stats;
    stats.k = k;
    window_minmax_rows(image, radius, 0, image.rows(), stats.zmin, stats.zmax);
    stats.zmed = Image(image.rows(), image.cols());
    std::vector<double> buf;
    buf.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    for (int r = 0; r < image.rows(); ++r) {
        for (int c = 0; c < image.cols(); ++c) {
            if (stats.zmin.at(r, c) == stats.zmax.at(r, c)) {
                stats.zmed.at(r, c) = stats.zmin.at(r, c);  // constant window
            } else {
                gather_window(image, r, c, radius, buf);
                stats.zmed.at(r, c) = median_of(buf);
            }
        }
    }
    return stats;
}

namespace detail {

void adaptive_median_rows(const Image& src, int smax, int row_begin, int row_end,
                          Image& dst, std::vector<int>* finalized_at) {
    validate_smax(smax);
    const int rows = src.rows(), cols = src.cols();
    if (row_begin < 0 || row_end > rows || row_begin >= row_end) {
        throw std::invalid_argument("bad row range [" + std::to_string(row_begin) + ", " +
                                    std::to_string(row_end) + ") for " +
                                    std::to_string(rows) + " rows");
    }
    const int out_rows = row_end - row_begin;
    if (dst.rows() != out_rows || dst.cols() != cols) dst = Image(out_rows, cols);
    for (int r = 0; r < out_rows; ++r) {
        std::memcpy(dst.row(r), src.row(row_begin + r),
                    static_cast<std::size_t>(cols) * sizeof(double));
    }

    const std::size_t total = dst.size();
    if (finalized_at) finalized_at->assign(total, 0);
    std::vector<std::uint8_t> done(total, 0);
    std::size_t remaining = total;

    std::vector<double> buf;
    buf.reserve(static_cast<std::size_t>(smax) * static_cast<std::size_t>(smax));
    std::vector<std::int64_t> pending;  // output indices still open; built when sparse
    bool sparse = false;

    for (int k = 3; k <= smax && remaining > 0; k += 2) {
        const int radius = (k - 1) / 2;

        // Once few pixels stay open, per-pixel evaluation beats full planes.
        if (!sparse && remaining * 4 <= total) {
            pending.clear();
            pending.reserve(remaining);
            for (std::size_t i = 0; i < total; ++i) {
                if (!done[i]) pending.push_back(static_cast<std::int64_t>(i));
            }
            sparse = true;
        }

        if (!sparse) {
            Image zmin, zmax;
            window_minmax_rows(src, radius, row_begin, row_end, zmin, zmax);
            for (int r = 0; r < out_rows; ++r) {
                const double* mn = zmin.row(r);
                const double* mx = zmax.row(r);
                double* out = dst.row(r);
                const double* gin = src.row(row_begin + r);
                std::uint8_t* dn = done.data() + static_cast<std::size_t>(r) * cols;
                for (int c = 0; c < cols; ++c) {
                    if (dn[c] || !(mn[c] < mx[c])) continue;
                    gather_window(src, row_begin + r, c, radius, buf);
                    const double zmed = median_of(buf);
                    if (zmed > mn[c] && mx[c] > zmed) {  // level A
                        const double g0 = gin[c];
                        out[c] = (g0 > mn[c] && mx[c] > g0) ? g0 : zmed;  // level B
                        dn[c] = 1;
                        --remaining;
                        if (finalized_at) {
                            (*finalized_at)[static_cast<std::size_t>(r) * cols + c] = k;
                        }
                    }
                }
            }
        } else {
            std::size_t keep = 0;
            for (std::size_t n = 0; n < pending.size(); ++n) {
                const std::int64_t i = pending[n];
                const int r = static_cast<int>(i / cols);
                const int c = static_cast<int>(i % cols);
                gather_window(src, row_begin + r, c, radius, buf);
                double zmn = buf[0], zmx = buf[0];
                for (const double v : buf) {
                    if (v < zmn) zmn = v;
                    if (v > zmx) zmx = v;
                }
                bool closed = false;
                if (zmn < zmx) {
                    const double zmed = median_of(buf);
                    if (zmed > zmn && zmx > zmed) {
                        const double g0 = src.at(row_begin + r, c);
                        dst.at(r, c) = (g0 > zmn && zmx > g0) ? g0 : zmed;
                        done[static_cast<std::size_t>(i)] = 1;
                        --remaining;
                        if (finalized_at) (*finalized_at)[static_cast<std::size_t>(i)] = k;
                        closed = true;
                    }
                }
                if (!closed) pending[keep++] = i;
            }
            pending.resize(keep);
        }
    }
}

}  // namespace detail

Image adaptive_median_serial(const Image& image, int smax) {
    validate_smax(smax);
    Image out;
    detail::adaptive_median_rows(image, smax, 0, image.rows(), out);
    return out;
}

}  // namespace denoise
