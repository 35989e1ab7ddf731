#pragma once

#include <array>

namespace denoise {

/// One image of the bundled "table1" reference timing sweep: a serial time
/// plus a parallel time per (partition group, worker count) cell. The sweep
/// lets the derived-metric computations be validated independently of the
/// host hardware.
struct FixtureImage {
    const char* name;
    int rows;
    int cols;
    double t_serial;
    double t_parallel[3][6];  ///< [partition group][worker column]
};

inline constexpr std::array<int, 3> kFixturePartitions{2, 4, 8};
inline constexpr std::array<int, 6> kFixtureWorkers{2, 4, 6, 8, 10, 12};

const std::array<FixtureImage, 3>& table1_fixture();

/// Cross-image averages for one partition group at workers == partitions.
struct FixtureSummary {
    int partitions = 0;
    int workers = 0;
    double mean_serial = 0.0;
    double mean_parallel = 0.0;
    double speedup = 0.0;
    double efficiency = 0.0;
};

/// Summaries for each partition group at its matched worker count
/// (2 partitions / 2 workers, 4/4, 8/8).
std::array<FixtureSummary, 3> fixture_summary_matched();

}  // namespace denoise
