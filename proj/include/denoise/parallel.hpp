#pragma once

#include <chrono>
#include <type_traits>
#include <utility>

#include "denoise/image.hpp"
#include "denoise/wiener.hpp"

namespace denoise {

/// Knobs for the tiled adaptive median stage and the surrounding pipeline.
struct FilterConfig {
    int smax = 11;      ///< odd integer > 1
    int parts = 1;      ///< number of horizontal bands
    int workers = 1;    ///< concurrent executors over the band queue
    EstimateMode estimate_mode = EstimateMode::robust;
    bool use_halo = true;  ///< false reproduces a literal halo-free split
};

/// Throws std::invalid_argument when any field is out of range.
void validate_config(const FilterConfig& config);

/// Data-parallel adaptive median: splits the image into config.parts bands
/// with halo (smax - 1) / 2, filters bands with config.workers executors
/// pulling from a shared queue, and stitches the cores back together.
/// With use_halo the result is bit-identical to adaptive_median_serial for
/// every parts/workers combination. The input is shared read-only; each
/// worker writes only its own band, so results are independent of
/// scheduling. Requires parts <= image.rows().
Image adaptive_median_parallel(const Image& image, const FilterConfig& config);

/// Runs a thunk and returns its wall-clock duration in seconds on the
/// monotonic clock: {result, seconds} for value-returning thunks, plain
/// seconds for void ones.
template <typename F>
auto timed_run(F&& thunk) {
    using R = std::invoke_result_t<F&&>;
    const auto t0 = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<R>) {
        std::forward<F>(thunk)();
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    } else {
        R result = std::forward<F>(thunk)();
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return std::pair<R, double>{std::move(result), seconds};
    }
}

}  // namespace denoise
