#include "denoise/pgm_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace denoise {

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
    throw std::runtime_error("pgm " + path.string() + ": " + what);
}

// Skips whitespace and '#' comments (which run to end of line), per the
// Netpbm header convention.
void skip_separators(std::istream& in) {
    for (;;) {
        int c = in.peek();
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (c != EOF && std::isspace(c)) {
            in.get();
        } else {
            return;
        }
    }
}

long read_header_int(std::istream& in, const std::filesystem::path& path, const char* name) {
    skip_separators(in);
    long value = 0;
    bool any = false;
    while (std::isdigit(in.peek())) {
        value = value * 10 + (in.get() - '0');
        any = true;
        if (value > 1000000000L) fail(path, std::string("header field out of range: ") + name);
    }
    if (!any) fail(path, std::string("malformed header: missing ") + name);
    return value;
}

}  // namespace

Image load_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open file");

    char m0 = 0, m1 = 0;
    in.get(m0);
    in.get(m1);
    if (!in || m0 != 'P' || (m1 != '2' && m1 != '5')) {
        std::string magic;
        if (in) magic.assign({m0, m1});
        fail(path, "unsupported magic \"" + magic + "\" (want P2 or P5)");
    }
    const bool binary = (m1 == '5');

    const long cols = read_header_int(in, path, "width");
    const long rows = read_header_int(in, path, "height");
    const long maxval = read_header_int(in, path, "maxval");
    if (cols < 1 || rows < 1) fail(path, "non-positive dimensions in header");
    if (maxval < 1 || maxval > 65535) fail(path, "maxval " + std::to_string(maxval) + " out of range [1, 65535]");

    const std::size_t count = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    std::vector<double> px(count);
    // Divide each sample rather than multiplying by a precomputed reciprocal:
    // the round trip through save_pgm must land back on exactly k/maxval.
    const double denom = static_cast<double>(maxval);

    if (binary) {
        // Exactly one whitespace byte separates the header from the raster.
        int sep = in.get();
        if (sep == EOF || !std::isspace(sep)) fail(path, "missing separator before pixel data");
        const int bytes_per_sample = maxval > 255 ? 2 : 1;
        std::vector<unsigned char> raw(count * bytes_per_sample);
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
        if (static_cast<std::size_t>(in.gcount()) != raw.size()) fail(path, "truncated pixel data");
        for (std::size_t i = 0; i < count; ++i) {
            long sample = bytes_per_sample == 2
                              ? (static_cast<long>(raw[2 * i]) << 8) | raw[2 * i + 1]
                              : raw[i];
            if (sample > maxval) fail(path, "sample " + std::to_string(sample) + " exceeds maxval");
            px[i] = static_cast<double>(sample) / denom;
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            skip_separators(in);
            long sample = 0;
            bool any = false;
            while (std::isdigit(in.peek())) {
                sample = sample * 10 + (in.get() - '0');
                any = true;
            }
            if (!any) fail(path, "truncated pixel data at sample " + std::to_string(i));
            if (sample > maxval) fail(path, "sample " + std::to_string(sample) + " exceeds maxval");
            px[i] = static_cast<double>(sample) / denom;
        }
    }
    return Image::from_pixels(static_cast<int>(rows), static_cast<int>(cols), std::move(px));
}

void save_pgm(const Image& image, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(path, "cannot open file for writing");

    out << "P5\n" << image.cols() << " " << image.rows() << "\n255\n";
    std::vector<unsigned char> raw(image.size());
    const std::vector<double>& px = image.pixels();
    for (std::size_t i = 0; i < px.size(); ++i) {
        long q = std::lround(px[i] * 255.0);  // rounds halves away from zero
        if (q < 0) q = 0;
        if (q > 255) q = 255;
        raw[i] = static_cast<unsigned char>(q);
    }
    out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (!out) fail(path, "write failed");
}

}  // namespace denoise
