#include "denoise/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "denoise/adaptive_median.hpp"
#include "denoise/tiling.hpp"

namespace denoise {

void validate_config(const FilterConfig& config) {
    validate_smax(config.smax);
    if (config.parts < 1) {
        throw std::invalid_argument("parts must be >= 1, got " + std::to_string(config.parts));
    }
    if (config.workers < 1) {
        throw std::invalid_argument("workers must be >= 1, got " +
                                    std::to_string(config.workers));
    }
}

Image adaptive_median_parallel(const Image& image, const FilterConfig& config) {
    validate_config(config);
    if (config.parts > image.rows()) {
        throw std::invalid_argument("parts " + std::to_string(config.parts) +
                                    " exceeds image rows " + std::to_string(image.rows()));
    }

    const int halo = config.use_halo ? (config.smax - 1) / 2 : 0;
    const std::vector<Tile> tiles = split_bands(image, config.parts, halo);

    std::vector<Tile> results(tiles.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto work = [&] {
        try {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tiles.size()) return;
                const Tile& t = tiles[i];
                Image band;
                detail::adaptive_median_rows(t.data, config.smax, t.halo_above,
                                             t.halo_above + t.core_rows, band);
                results[i] = Tile{t.index, t.core_start, t.core_rows, 0, 0, std::move(band)};
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };

    if (config.workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(config.workers));
        for (int w = 0; w < config.workers; ++w) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    return stitch_bands(results, image.rows(), image.cols());
}

}  // namespace denoise
