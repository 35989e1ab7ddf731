#pragma once

#include "denoise/image.hpp"

namespace denoise {

/// Mean squared difference; dimensions must match.
double mse(const Image& a, const Image& b);

/// 10 * log10(1 / mse) on the unit intensity scale (MAX = 1).
/// Identical images give positive infinity.
double psnr(const Image& a, const Image& b);

/// t_serial / t_parallel; both must be positive.
double speedup(double t_serial, double t_parallel);

/// sp / p for p >= 1; a processor-utilization measure.
double efficiency(double sp, int p);

/// t_parallel - t_serial / p. Negative values are possible (superlinear runs).
double overhead(double t_parallel, double t_serial, int p);

/// One benchmark measurement row with the derived metrics. p is the worker
/// count, which is what the efficiency/overhead formulas divide by.
struct PerfRecord {
    int rows = 0;
    int cols = 0;
    int smax = 0;
    int partitions = 0;
    int workers = 0;
    int trial = 0;
    double t_serial = 0.0;
    double t_parallel = 0.0;
    double speedup = 0.0;
    double efficiency = 0.0;
    double overhead = 0.0;
    int p = 0;

    static PerfRecord compute(int rows, int cols, int smax, int partitions, int workers,
                              int trial, double t_serial, double t_parallel);
};

}  // namespace denoise
