#include "denoise/bench_fixture.hpp"

#include <algorithm>

#include "denoise/metrics.hpp"

namespace denoise {

const std::array<FixtureImage, 3>& table1_fixture() {
    static const std::array<FixtureImage, 3> fixture{{
        {"1900x2368", 1900, 2368, 79.5,
         {{10.41, 10.87, 10.89, 10.37, 10.96, 11.11},
          {12.1, 11.99, 12.22, 12.29, 12.49, 12.23},
          {16.22, 15.84, 15.87, 16.62, 15.64, 16.2}}},
        {"3800x4736", 3800, 4736, 272.42,
         {{44.67, 41.59, 36.14, 35.12, 42.86, 49.28},
          {41.37, 40.76, 40.62, 41.06, 41.35, 42.18},
          {54.88, 54.65, 56.63, 56.85, 54.69, 55.21}}},
        {"7600x9472", 7600, 9472, 1742.5,
         {{640.34, 863.87, 856.24, 652.75, 914.24, 690.8},
          {768.0, 470.08, 480.03, 532.75, 490.92, 703.38},
          {847.9, 538.55, 769.91, 505.67, 656.4, 611.59}}},
    }};
    return fixture;
}

std::array<FixtureSummary, 3> fixture_summary_matched() {
    const auto& fixture = table1_fixture();
    std::array<FixtureSummary, 3> summaries{};
    for (std::size_t g = 0; g < kFixturePartitions.size(); ++g) {
        const int parts = kFixturePartitions[g];
        const auto w_it = std::find(kFixtureWorkers.begin(), kFixtureWorkers.end(), parts);
        const std::size_t w = static_cast<std::size_t>(w_it - kFixtureWorkers.begin());

        double sum_serial = 0.0, sum_parallel = 0.0;
        for (const FixtureImage& img : fixture) {
            sum_serial += img.t_serial;
            sum_parallel += img.t_parallel[g][w];
        }
        FixtureSummary& s = summaries[g];
        s.partitions = parts;
        s.workers = parts;
        s.mean_serial = sum_serial / static_cast<double>(fixture.size());
        s.mean_parallel = sum_parallel / static_cast<double>(fixture.size());
        s.speedup = speedup(s.mean_serial, s.mean_parallel);
        s.efficiency = efficiency(s.speedup, s.workers);
    }
    return summaries;
}

}  // namespace denoise
