// Command-line front end: degrade images, run the hybrid filter, and sweep
// partition/worker grids into CSV reports.

#include <CLI11.hpp>

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "denoise/adaptive_median.hpp"
#include "denoise/bench_fixture.hpp"
#include "denoise/image.hpp"
#include "denoise/metrics.hpp"
#include "denoise/noise.hpp"
#include "denoise/pgm_io.hpp"
#include "denoise/phantom.hpp"
#include "denoise/pipeline.hpp"

namespace {

using namespace denoise;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

std::string format_psnr(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", value);  // prints "inf" for infinity
    return buf;
}

std::string format_time(double seconds) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", seconds);
    return buf;
}

struct DegradeArgs {
    std::string in;
    std::string out;
    double gauss_var = 0.01;
    double gauss_mean = 0.0;
    double sp_density = 0.05;
    std::uint64_t seed = 1;
};

int run_degrade(const DegradeArgs& args) {
    const Image clean = load_pgm(args.in);
    NoiseSpec spec;
    spec.gaussian_variance = args.gauss_var;
    spec.gaussian_mean = args.gauss_mean;
    spec.sp_density = args.sp_density;
    spec.seed = args.seed;
    const Image noisy = degrade(clean, spec);
    save_pgm(noisy, args.out);
    std::cout << "psnr=" << format_psnr(psnr(noisy, clean)) << "\n";
    return kExitOk;
}

struct DenoiseArgs {
    std::string in;
    std::string out;
    std::string reference;
    int smax = 11;
    int parts = 1;
    int workers = 1;
    bool no_halo = false;
    bool stretch_after_each = false;
};

int run_denoise(const DenoiseArgs& args) {
    validate_smax(args.smax);
    const Image noisy = load_pgm(args.in);

    FilterConfig config;
    config.smax = args.smax;
    config.parts = args.parts;
    config.workers = args.workers;
    config.use_halo = !args.no_halo;

    Image reference;
    const Image* reference_ptr = nullptr;
    if (!args.reference.empty()) {
        reference = load_pgm(args.reference);
        reference_ptr = &reference;
        config.estimate_mode = EstimateMode::reference;
    }

    const HybridResult result =
        hybrid_denoise(noisy, config, reference_ptr, args.stretch_after_each);
    save_pgm(result.image, args.out);

    std::cout << "t_adaptive=" << format_time(result.t_adaptive)
              << " t_wiener=" << format_time(result.t_wiener)
              << " t_stretch=" << format_time(result.t_stretch) << "\n";
    if (reference_ptr) {
        std::cout << "psnr=" << format_psnr(psnr(result.image, reference)) << "\n";
    }
    return kExitOk;
}

struct BenchArgs {
    std::vector<std::string> images;
    std::vector<std::string> phantoms;
    std::string out;
    std::string fixture;
    int smax = 11;
    std::vector<int> partitions{2, 4, 8};
    std::vector<int> workers{2, 4, 6, 8, 10, 12};
    int trials = 3;
    std::uint64_t seed = 1;
    double gauss_var = 0.01;
    double sp_density = 0.05;
};

struct BenchInput {
    std::string name;
    Image clean;
};

BenchInput parse_phantom_spec(const std::string& spec, std::uint64_t seed) {
    int rows = 0, cols = 0;
    const auto x = spec.find('x');
    try {
        if (x == std::string::npos) {
            rows = cols = std::stoi(spec);
        } else {
            rows = std::stoi(spec.substr(0, x));
            cols = std::stoi(spec.substr(x + 1));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("--phantom expects SIZE or ROWSxCOLS, got \"" + spec + "\"");
    }
    const std::string name =
        "phantom" + std::to_string(rows) + "x" + std::to_string(cols);
    return {name, make_phantom(rows, cols, seed)};
}

void write_csv_header(std::ostream& out) {
    out << "image,rows,cols,smax,partitions,workers,trial,t_serial,t_parallel,"
           "speedup,efficiency,overhead,psnr\n";
}

void write_csv_row(std::ostream& out, const std::string& name, const PerfRecord& r,
                   const std::string& psnr_text) {
    out << name << ',' << r.rows << ',' << r.cols << ',' << r.smax << ',' << r.partitions
        << ',' << r.workers << ',' << r.trial << ',' << format_time(r.t_serial) << ','
        << format_time(r.t_parallel) << ',' << format_time(r.speedup) << ','
        << format_time(r.efficiency) << ',' << format_time(r.overhead) << ','
        << psnr_text << '\n';
}

int run_bench_fixture(const BenchArgs& args, std::ostream& csv) {
    write_csv_header(csv);
    const auto& fixture = table1_fixture();
    for (const FixtureImage& img : fixture) {
        for (std::size_t g = 0; g < kFixturePartitions.size(); ++g) {
            for (std::size_t w = 0; w < kFixtureWorkers.size(); ++w) {
                const PerfRecord r = PerfRecord::compute(
                    img.rows, img.cols, args.smax, kFixturePartitions[g], kFixtureWorkers[w],
                    1, img.t_serial, img.t_parallel[g][w]);
                write_csv_row(csv, img.name, r, "nan");
            }
        }
    }
    for (const FixtureSummary& s : fixture_summary_matched()) {
        std::printf(
            "partitions=%d workers=%d mean_serial=%.2f mean_parallel=%.2f "
            "speedup=%.2f efficiency=%.2f\n",
            s.partitions, s.workers, s.mean_serial, s.mean_parallel, s.speedup, s.efficiency);
    }
    return kExitOk;
}

int run_bench(const BenchArgs& args) {
    std::ofstream csv(args.out);
    if (!csv) {
        throw std::runtime_error("cannot open CSV output path " + args.out);
    }

    if (!args.fixture.empty()) {
        return run_bench_fixture(args, csv);
    }

    validate_smax(args.smax);
    if (args.partitions.empty() || args.workers.empty()) {
        throw std::invalid_argument("partition and worker sets must be nonempty");
    }
    if (args.trials < 1) {
        throw std::invalid_argument("--trials must be >= 1");
    }

    std::vector<BenchInput> inputs;
    for (const std::string& path : args.images) {
        inputs.push_back({std::filesystem::path(path).stem().string(), load_pgm(path)});
    }
    for (const std::string& spec : args.phantoms) {
        inputs.push_back(parse_phantom_spec(spec, args.seed));
    }
    if (inputs.empty()) {
        throw std::invalid_argument("no inputs: pass --image and/or --phantom");
    }

    NoiseSpec noise_spec;
    noise_spec.gaussian_variance = args.gauss_var;
    noise_spec.sp_density = args.sp_density;
    noise_spec.seed = args.seed;

    write_csv_header(csv);
    // medians across images and trials, keyed by (partitions, workers)
    std::map<std::pair<int, int>, std::vector<double>> cell_times;

    for (const BenchInput& input : inputs) {
        const Image noisy = degrade(input.clean, noise_spec);

        FilterConfig serial_config;
        serial_config.smax = args.smax;
        std::vector<double> t_serial(static_cast<std::size_t>(args.trials));
        for (int trial = 0; trial < args.trials; ++trial) {
            const auto [result, seconds] =
                timed_run([&] { return hybrid_denoise(noisy, serial_config); });
            t_serial[static_cast<std::size_t>(trial)] = seconds;
        }

        for (int parts : args.partitions) {
            for (int workers : args.workers) {
                FilterConfig config;
                config.smax = args.smax;
                config.parts = parts;
                config.workers = workers;
                for (int trial = 0; trial < args.trials; ++trial) {
                    const auto [result, seconds] =
                        timed_run([&] { return hybrid_denoise(noisy, config); });
                    const PerfRecord record = PerfRecord::compute(
                        input.clean.rows(), input.clean.cols(), args.smax, parts, workers,
                        trial + 1, t_serial[static_cast<std::size_t>(trial)], seconds);
                    write_csv_row(csv, input.name, record,
                                  format_psnr(psnr(result.image, input.clean)));
                    cell_times[{parts, workers}].push_back(seconds);
                }
            }
        }
    }

    for (int parts : args.partitions) {
        int best_workers = 0;
        double best_median = 0.0;
        for (int workers : args.workers) {
            std::vector<double>& times = cell_times[{parts, workers}];
            std::sort(times.begin(), times.end());
            const double median = times[times.size() / 2];
            if (best_workers == 0 || median < best_median) {
                best_workers = workers;
                best_median = median;
            }
        }
        std::printf("partitions=%d best_workers=%d median_t_parallel=%.6f\n", parts,
                    best_workers, best_median);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hybrid grayscale denoiser: adaptive median, Wiener, contrast stretch"};
    app.require_subcommand(1);

    DegradeArgs degrade_args;
    CLI::App* degrade_cmd =
        app.add_subcommand("degrade", "Add Gaussian and salt & pepper noise to a PGM image");
    degrade_cmd->add_option("--in", degrade_args.in, "input PGM")->required();
    degrade_cmd->add_option("--out", degrade_args.out, "output PGM")->required();
    degrade_cmd->add_option("--gauss-var", degrade_args.gauss_var, "Gaussian variance")
        ->check(CLI::NonNegativeNumber);
    degrade_cmd->add_option("--gauss-mean", degrade_args.gauss_mean, "Gaussian mean");
    degrade_cmd->add_option("--sp-density", degrade_args.sp_density, "impulse density")
        ->check(CLI::Range(0.0, 1.0));
    degrade_cmd->add_option("--seed", degrade_args.seed, "RNG seed");

    DenoiseArgs denoise_args;
    CLI::App* denoise_cmd = app.add_subcommand("denoise", "Run the hybrid filter on a PGM image");
    denoise_cmd->add_option("--in", denoise_args.in, "input PGM")->required();
    denoise_cmd->add_option("--out", denoise_args.out, "output PGM")->required();
    denoise_cmd->add_option("--smax", denoise_args.smax, "max adaptive median window (odd, > 1)");
    denoise_cmd->add_option("--parts", denoise_args.parts, "number of bands")
        ->check(CLI::PositiveNumber);
    denoise_cmd->add_option("--workers", denoise_args.workers, "concurrent executors")
        ->check(CLI::PositiveNumber);
    denoise_cmd->add_flag("--no-halo", denoise_args.no_halo,
                          "split without halo rows (tile borders may diverge from serial)");
    denoise_cmd->add_flag("--stretch-after-each", denoise_args.stretch_after_each,
                          "contrast-stretch after the median stage as well");
    denoise_cmd->add_option("--reference", denoise_args.reference,
                            "clean reference PGM; enables reference-mode noise estimation "
                            "and PSNR reporting");

    BenchArgs bench_args;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "Sweep partition/worker grids and write a CSV report");
    bench_cmd->add_option("--image", bench_args.images, "input PGM (repeatable)");
    bench_cmd->add_option("--phantom", bench_args.phantoms,
                          "synthetic input, SIZE or ROWSxCOLS (repeatable)");
    bench_cmd->add_option("--out", bench_args.out, "CSV output path")->required();
    bench_cmd->add_option("--fixture", bench_args.fixture,
                          "replay the bundled reference timing sweep (\"table1\")")
        ->check(CLI::IsMember({"table1"}));
    bench_cmd->add_option("--smax", bench_args.smax, "max adaptive median window");
    bench_cmd->add_option("--partitions", bench_args.partitions, "partition counts")
        ->delimiter(',');
    bench_cmd->add_option("--workers", bench_args.workers, "worker counts")->delimiter(',');
    bench_cmd->add_option("--trials", bench_args.trials, "trials per cell");
    bench_cmd->add_option("--seed", bench_args.seed, "RNG seed");
    bench_cmd->add_option("--gauss-var", bench_args.gauss_var, "Gaussian variance")
        ->check(CLI::NonNegativeNumber);
    bench_cmd->add_option("--sp-density", bench_args.sp_density, "impulse density")
        ->check(CLI::Range(0.0, 1.0));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(degrade_cmd)) return run_degrade(degrade_args);
        if (app.got_subcommand(denoise_cmd)) return run_denoise(denoise_args);
        if (app.got_subcommand(bench_cmd)) return run_bench(bench_args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
