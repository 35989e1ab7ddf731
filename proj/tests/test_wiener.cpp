#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "denoise/dft2.hpp"
#include "denoise/image.hpp"
#include "denoise/noise.hpp"
#include "denoise/wiener.hpp"
#include "support/oracles.hpp"

using namespace denoise;

namespace {

double max_abs_diff(const Image& a, const Image& b) {
    REQUIRE(a.same_size(b));
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a.pixels()[i] - b.pixels()[i]));
    }
    return worst;
}

double spatial_energy(const Image& img) {
    double acc = 0.0;
    for (double p : img.pixels()) acc += p * p;
    return acc;
}

double spectral_energy(const Spectrum& spec) {
    double acc = 0.0;
    for (const std::complex<double>& b : spec.bins) acc += std::norm(b);
    return acc;
}

}  // namespace

TEST_CASE("transform basics: zero image, single pixel") {
    Image zero(5, 7, 0.0);
    Spectrum zs = dft2_forward(zero);
    for (const std::complex<double>& b : zs.bins) CHECK(std::abs(b) == 0.0);

    Image one = Image::from_pixels(1, 1, {0.625});
    Spectrum os = dft2_forward(one);
    REQUIRE(os.bins.size() == 1);
    CHECK(os.at(0, 0).real() == doctest::Approx(0.625).epsilon(1e-15));
    CHECK(os.at(0, 0).imag() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(dft2_inverse(os).at(0, 0) == doctest::Approx(0.625).epsilon(1e-15));
}

TEST_CASE("a pure horizontal cosine occupies two conjugate bins") {
    const int n = 4;
    Image img(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            img.at(r, c) = std::cos(2.0 * std::numbers::pi * c / n);
    Spectrum spec = dft2_forward(img);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            const double expected = (u == 0 && (v == 1 || v == 3)) ? 8.0 : 0.0;
            CHECK(std::abs(spec.at(u, v) - std::complex<double>{expected, 0.0}) < 1e-9);
        }
    }
}

TEST_CASE("forward transform matches direct summation") {
    std::uint64_t seed = 400;
    for (auto [rows, cols] : {std::pair{3, 3}, {4, 6}, {8, 8}, {7, 5}}) {
        Image img = oracles::random_image(rows, cols, seed++);
        Spectrum fast = dft2_forward(img);
        Spectrum slow = oracles::dft_forward_oracle(img);
        for (std::size_t i = 0; i < fast.bins.size(); ++i) {
            CHECK(std::abs(fast.bins[i] - slow.bins[i]) < 1e-9);
        }
    }
}

TEST_CASE("round trip and Parseval on awkward sizes") {
    std::uint64_t seed = 500;
    for (auto [rows, cols] : {std::pair{17, 23}, {16, 16}, {31, 9}, {1, 12}, {13, 1}}) {
        Image img = oracles::random_image(rows, cols, seed++);
        Spectrum spec = dft2_forward(img);
        CHECK(max_abs_diff(dft2_inverse(spec), img) < 1e-9);
        const double lhs = spectral_energy(spec);
        const double rhs = spatial_energy(img) * static_cast<double>(img.size());
        CHECK(std::abs(lhs - rhs) <= 1e-9 * rhs);
    }
}

TEST_CASE("inverse clamp flag bounds the output") {
    Image img = oracles::random_image(6, 6, 77);
    Spectrum spec = dft2_forward(img);
    for (std::complex<double>& b : spec.bins) b *= 3.0;  // push values out of range
    Image unclamped = dft2_inverse(spec, false);
    Image clamped = dft2_inverse(spec, true);
    bool saw_overshoot = false;
    for (std::size_t i = 0; i < img.size(); ++i) {
        const double u = unclamped.pixels()[i];
        saw_overshoot = saw_overshoot || u > 1.0 || u < 0.0;
        CHECK(clamped.pixels()[i] == clamp01(u));
    }
    CHECK(saw_overshoot);
}

TEST_CASE("noise estimate: reference mode is the mean squared difference") {
    Image a(8, 8, 0.5);
    Image b = a;
    b.at(0, 0) = 0.9;  // one pixel off by 0.4
    NoiseEstimate est = estimate_noise_variance(a, &b);
    CHECK(est.source == NoiseSource::reference);
    CHECK(est.sigma2 == doctest::Approx(0.16 / 64.0).epsilon(1e-12));

    Image mismatched(4, 4, 0.0);
    CHECK_THROWS_AS(estimate_noise_variance(a, &mismatched), std::invalid_argument);
}

TEST_CASE("noise estimate: robust mode is zero on constants, near sigma^2 on noise") {
    Image flat(32, 32, 0.3);
    NoiseEstimate zero = estimate_noise_variance(flat);
    CHECK(zero.source == NoiseSource::robust);
    CHECK(zero.sigma2 == 0.0);

    Image noisy = add_gaussian(Image(256, 256, 0.5), 0.0, 0.01, 21);
    const double sigma2 = estimate_noise_variance(noisy).sigma2;
    CHECK(sigma2 > 0.007);
    CHECK(sigma2 < 0.013);
}

TEST_CASE("wiener with zero variance returns the input") {
    Image img = oracles::random_image(12, 9, 30);
    CHECK(wiener_filter(img, {0.0, NoiseSource::given}, false) == img);
}

TEST_CASE("wiener rejects negative variance and kills an all-noise image") {
    Image img = oracles::random_image(8, 8, 31);
    CHECK_THROWS_AS(wiener_filter(img, {-1e-9, NoiseSource::given}), std::invalid_argument);

    // With noise power above every bin's power all gains clamp to zero.
    Image tiny(4, 4, 0.0);
    tiny.at(1, 2) = 0.01;
    Image out = wiener_filter(tiny, {1.0, NoiseSource::given}, false);
    for (double p : out.pixels()) CHECK(std::abs(p) < 1e-12);
}

TEST_CASE("wiener attenuates a known cosine by the analytic gain") {
    const int n = 8;
    Image img(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            img.at(r, c) = std::cos(2.0 * std::numbers::pi * c / n);
    // Both occupied bins have power (MN/2)^2 = 1024; sigma2 = 0.01 gives
    // N0 = 0.64 and gain (1024 - 0.64) / 1024 = 0.999375.
    Image out = wiener_filter(img, {0.01, NoiseSource::given}, false);
    for (std::size_t i = 0; i < img.size(); ++i) {
        CHECK(out.pixels()[i] == doctest::Approx(0.999375 * img.pixels()[i]).epsilon(1e-9));
    }
}

TEST_CASE("wiener matches the direct-summation oracle") {
    std::uint64_t seed = 600;
    for (int trial = 0; trial < 12; ++trial) {
        Rng64 dims(seed);
        const int rows = 2 + static_cast<int>(dims.next_u64() % 7);
        const int cols = 2 + static_cast<int>(dims.next_u64() % 7);
        Image img = oracles::random_image(rows, cols, seed + 1);
        const double sigma2 = 0.002 + 0.004 * (trial % 3);
        Image fast = wiener_filter(img, {sigma2, NoiseSource::given}, false);
        Image slow = oracles::wiener_oracle(img, sigma2);
        CAPTURE(trial);
        CHECK(max_abs_diff(fast, slow) < 1e-6);
        seed += 7;
    }
}

TEST_CASE("wiener never adds energy, and larger variance smooths harder") {
    Image img = add_gaussian(oracles::random_image(24, 24, 90), 0.0, 0.01, 91);
    Image mild = wiener_filter(img, {0.002, NoiseSource::given}, false);
    Image strong = wiener_filter(img, {0.02, NoiseSource::given}, false);
    CHECK(spatial_energy(mild) <= spatial_energy(img) * (1.0 + 1e-12));
    CHECK(spatial_energy(strong) <= spatial_energy(mild) * (1.0 + 1e-12));

    Spectrum sm = dft2_forward(mild);
    Spectrum ss = dft2_forward(strong);
    for (std::size_t i = 0; i < sm.bins.size(); ++i) {
        CHECK(std::abs(ss.bins[i]) <= std::abs(sm.bins[i]) + 1e-9);
    }
}
