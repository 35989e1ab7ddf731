#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "denoise/image.hpp"
#include "denoise/metrics.hpp"
#include "denoise/noise.hpp"
#include "denoise/phantom.hpp"

using namespace denoise;

namespace {

struct Moments {
    double mean;
    double variance;
};

Moments sample_moments(const Image& img) {
    double acc = 0.0;
    for (double p : img.pixels()) acc += p;
    const double mean = acc / static_cast<double>(img.size());
    double var = 0.0;
    for (double p : img.pixels()) var += (p - mean) * (p - mean);
    return {mean, var / static_cast<double>(img.size() - 1)};
}

}  // namespace

TEST_CASE("uniform01 stays in [0, 1) and is seed-deterministic") {
    Rng64 a(42), b(42), c(43);
    bool any_diff = false;
    for (int i = 0; i < 10000; ++i) {
        const double x = a.uniform01();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
        CHECK(x == b.uniform01());
        any_diff = any_diff || x != c.uniform01();
    }
    CHECK(any_diff);
}

TEST_CASE("normal draws have standard moments") {
    Rng64 rng(7);
    const int n = 200000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = rng.normal();
        sum += z;
        sumsq += z * z;
    }
    const double mean = sum / n;
    const double var = sumsq / n - mean * mean;
    CHECK(std::abs(mean) < 0.02);
    CHECK(var > 0.98);
    CHECK(var < 1.02);
}

TEST_CASE("add_gaussian with zero variance shifts by the mean only") {
    Image img(8, 8, 0.4);
    CHECK(add_gaussian(img, 0.0, 0.0, 5) == img);
    Image shifted = add_gaussian(img, 0.2, 0.0, 5);
    for (double p : shifted.pixels()) CHECK(p == doctest::Approx(0.6).epsilon(1e-15));
}

TEST_CASE("add_gaussian is deterministic per seed") {
    Image img(16, 16, 0.5);
    CHECK(add_gaussian(img, 0.0, 0.01, 9) == add_gaussian(img, 0.0, 0.01, 9));
    CHECK(add_gaussian(img, 0.0, 0.01, 9) != add_gaussian(img, 0.0, 0.01, 10));
}

TEST_CASE("add_gaussian realized variance matches the request") {
    Image img(256, 256, 0.5);
    Image noisy = add_gaussian(img, 0.0, 0.01, 11);
    const Moments m = sample_moments(noisy);
    CHECK(m.mean == doctest::Approx(0.5).epsilon(0.01));
    CHECK(m.variance > 0.008);
    CHECK(m.variance < 0.012);
}

TEST_CASE("add_gaussian clamps to the unit interval") {
    Image bright(32, 32, 1.0);
    Image noisy = add_gaussian(bright, 0.0, 0.25, 3);
    double lo = 2.0, hi = -1.0;
    for (double p : noisy.pixels()) {
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    CHECK(hi == 1.0);  // positive excursions land exactly on the clamp
    CHECK(lo >= 0.0);
    CHECK(lo < 1.0);
}

TEST_CASE("add_gaussian rejects negative variance") {
    Image img(4, 4, 0.5);
    CHECK_THROWS_AS(add_gaussian(img, 0.0, -0.01, 1), std::invalid_argument);
}

TEST_CASE("add_salt_pepper density endpoints") {
    Image img(10, 10, 0.5);
    CHECK(add_salt_pepper(img, 0.0, 2) == img);
    Image all_hit = add_salt_pepper(img, 1.0, 2);
    for (double p : all_hit.pixels()) CHECK((p == 0.0 || p == 1.0));
}

TEST_CASE("add_salt_pepper corrupts about density * pixels, half salt half pepper") {
    Image img(100, 100, 0.5);
    Image hit = add_salt_pepper(img, 0.05, 77);
    int salt = 0, pepper = 0;
    for (double p : hit.pixels()) {
        if (p == 1.0) ++salt;
        if (p == 0.0) ++pepper;
    }
    const int corrupted = salt + pepper;
    CHECK(corrupted >= 400);
    CHECK(corrupted <= 600);
    CHECK(std::abs(salt - pepper) < corrupted / 3);
    // Frozen draw for this exact (size, density, seed) tuple; a change here
    // means the uniform stream or the threshold rule changed.
    CHECK(corrupted == 502);
}

TEST_CASE("add_salt_pepper rejects densities outside [0, 1]") {
    Image img(4, 4, 0.5);
    CHECK_THROWS_AS(add_salt_pepper(img, -0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(add_salt_pepper(img, 1.5, 1), std::invalid_argument);
}

TEST_CASE("degrade with an all-zero spec is the identity") {
    Image img = make_phantom(64, 64, 5);
    NoiseSpec spec;
    spec.gaussian_variance = 0.0;
    spec.sp_density = 0.0;
    spec.seed = 123;
    CHECK(degrade(img, spec) == img);
}

TEST_CASE("degrade composes the two stages with a shifted impulse seed") {
    Image img = make_phantom(48, 40, 2);
    NoiseSpec spec;
    spec.seed = 31;
    Image expected =
        add_salt_pepper(add_gaussian(img, spec.gaussian_mean, spec.gaussian_variance, 31),
                        spec.sp_density, 32);
    CHECK(degrade(img, spec) == expected);
}

TEST_CASE("impulses land after the gaussian stage, exactly at 0 or 1") {
    Image img(64, 64, 0.5);
    NoiseSpec spec;
    spec.gaussian_variance = 0.04;
    spec.sp_density = 0.2;
    spec.seed = 6;
    Image out = degrade(img, spec);

    // Recover which pixels the impulse stage hit by replaying its stream.
    Image impulse_only = add_salt_pepper(img, spec.sp_density, spec.seed + 1);
    int hits = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (impulse_only.pixels()[i] != img.pixels()[i]) {
            ++hits;
            CHECK((out.pixels()[i] == 0.0 || out.pixels()[i] == 1.0));
        }
    }
    CHECK(hits > 500);
}

TEST_CASE("default degradation lands in the expected PSNR band") {
    Image clean = make_phantom(256, 256, 1);
    NoiseSpec spec;
    spec.seed = 1;
    Image noisy = degrade(clean, spec);
    const double p = psnr(noisy, clean);
    CHECK(p > 15.0);
    CHECK(p < 22.0);
}

TEST_CASE("stronger degradation gives larger error") {
    Image clean = make_phantom(128, 128, 9);
    NoiseSpec mild, strong_gauss, strong_sp;
    mild.seed = strong_gauss.seed = strong_sp.seed = 4;
    strong_gauss.gaussian_variance = 0.04;
    strong_sp.sp_density = 0.2;
    const double base = mse(degrade(clean, mild), clean);
    CHECK(mse(degrade(clean, strong_gauss), clean) > base);
    CHECK(mse(degrade(clean, strong_sp), clean) > base);
}
