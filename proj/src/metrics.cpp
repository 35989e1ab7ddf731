#include "denoise/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace denoise {

double mse(const Image& a, const Image& b) {
    if (!a.same_size(b)) {
        throw std::invalid_argument("mse: image dimensions do not match");
    }
    double acc = 0.0;
    const std::vector<double>& pa = a.pixels();
    const std::vector<double>& pb = b.pixels();
    for (std::size_t i = 0; i < pa.size(); ++i) {
        const double d = pa[i] - pb[i];
        acc += d * d;
    }
    return acc / static_cast<double>(pa.size());
}

double psnr(const Image& a, const Image& b) {
    const double m = mse(a, b);
    if (m == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(1.0 / m);
}

double speedup(double t_serial, double t_parallel) {
    if (t_serial <= 0.0 || t_parallel <= 0.0) {
        throw std::invalid_argument("speedup: times must be positive");
    }
    return t_serial / t_parallel;
}

double efficiency(double sp, int p) {
    if (p < 1) {
        throw std::invalid_argument("efficiency: p must be >= 1, got " + std::to_string(p));
    }
    return sp / static_cast<double>(p);
}

double overhead(double t_parallel, double t_serial, int p) {
    if (t_serial <= 0.0 || t_parallel <= 0.0) {
        throw std::invalid_argument("overhead: times must be positive");
    }
    if (p < 1) {
        throw std::invalid_argument("overhead: p must be >= 1, got " + std::to_string(p));
    }
    return t_parallel - t_serial / static_cast<double>(p);
}

PerfRecord PerfRecord::compute(int rows, int cols, int smax, int partitions, int workers,
                               int trial, double t_serial, double t_parallel) {
    PerfRecord r;
    r.rows = rows;
    r.cols = cols;
    r.smax = smax;
    r.partitions = partitions;
    r.workers = workers;
    r.trial = trial;
    r.t_serial = t_serial;
    r.t_parallel = t_parallel;
    r.p = workers;
    r.speedup = denoise::speedup(t_serial, t_parallel);
    r.efficiency = denoise::efficiency(r.speedup, r.p);
    r.overhead = denoise::overhead(t_parallel, t_serial, r.p);
    return r;
}

}  // namespace denoise
