#include "denoise/dft2.hpp"

#include <fftw3.h>

#include <mutex>

namespace denoise {

namespace {

// FFTW's planner is not thread-safe; plan creation/destruction is serialized.
// Executing distinct plans concurrently is fine.
std::mutex planner_mutex;

void run_plan_2d(int rows, int cols, std::complex<double>* in, std::complex<double>* out,
                 int sign) {
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        plan = fftw_plan_dft_2d(rows, cols, reinterpret_cast<fftw_complex*>(in),
                                reinterpret_cast<fftw_complex*>(out), sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        fftw_destroy_plan(plan);
    }
}

}  // namespace

Spectrum dft2_forward(const Image& image) {
    Spectrum spec;
    spec.rows = image.rows();
    spec.cols = image.cols();
    std::vector<std::complex<double>> in(image.size());
    const std::vector<double>& px = image.pixels();
    for (std::size_t i = 0; i < px.size(); ++i) in[i] = px[i];
    spec.bins.resize(image.size());
    run_plan_2d(spec.rows, spec.cols, in.data(), spec.bins.data(), FFTW_FORWARD);
    return spec;
}

Image dft2_inverse(const Spectrum& spectrum, bool clamp) {
    std::vector<std::complex<double>> in = spectrum.bins;
    std::vector<std::complex<double>> out(in.size());
    run_plan_2d(spectrum.rows, spectrum.cols, in.data(), out.data(), FFTW_BACKWARD);

    const double norm = 1.0 / (static_cast<double>(spectrum.rows) * spectrum.cols);
    std::vector<double> px(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        double v = out[i].real() * norm;
        px[i] = clamp ? clamp01(v) : v;
    }
    return Image::from_pixels(spectrum.rows, spectrum.cols, std::move(px));
}

}  // namespace denoise
