#include "denoise/wiener.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "denoise/adaptive_median.hpp"
#include "denoise/dft2.hpp"

namespace denoise {

namespace {

// Median of a full buffer; even lengths average the two central elements.
double median_all(std::vector<double>& v) {
    const std::size_t n = v.size();
    auto mid = v.begin() + static_cast<std::ptrdiff_t>(n / 2);
    std::nth_element(v.begin(), mid, v.end());
    double m = *mid;
    if (n % 2 == 0) {
        double lower = *std::max_element(v.begin(), mid);
        m = (m + lower) / 2.0;
    }
    return m;
}

}  // namespace

NoiseEstimate estimate_noise_variance(const Image& image, const Image* reference) {
    if (reference) {
        if (!image.same_size(*reference)) {
            throw std::invalid_argument("reference image dimensions do not match");
        }
        double acc = 0.0;
        const std::vector<double>& a = image.pixels();
        const std::vector<double>& b = reference->pixels();
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double d = a[i] - b[i];
            acc += d * d;
        }
        return {acc / static_cast<double>(a.size()), NoiseSource::reference};
    }

    const Image med3 = window_stats(image, 3).zmed;
    std::vector<double> residual(image.size());
    for (std::size_t i = 0; i < residual.size(); ++i) {
        residual[i] = std::abs(image.pixels()[i] - med3.pixels()[i]);
    }
    const double sigma = median_all(residual) / 0.6745;
    return {sigma * sigma, NoiseSource::robust};
}

Image wiener_filter(const Image& image, const NoiseEstimate& noise, bool clamp) {
    if (noise.sigma2 < 0.0) {
        throw std::invalid_argument("noise variance must be nonnegative");
    }
    if (noise.sigma2 == 0.0) {
        // Zero noise power makes every occupied bin's gain exactly 1, so the
        // exact result is the input itself; skipping the transform avoids
        // round-trip residue that downstream stages could amplify.
        Image out = image;
        if (clamp) {
            for (double& p : out.pixels()) p = clamp01(p);
        }
        return out;
    }
    Spectrum spec = dft2_forward(image);
    const double noise_power =
        static_cast<double>(image.rows()) * image.cols() * noise.sigma2;
    for (std::complex<double>& bin : spec.bins) {
        const double power = std::norm(bin);
        const double gain = power > noise_power ? (power - noise_power) / power : 0.0;
        bin *= gain;
    }
    return dft2_inverse(spec, clamp);
}

}  // namespace denoise
