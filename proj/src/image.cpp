#include "denoise/image.hpp"

#include <stdexcept>
#include <string>

namespace denoise {

Image::Image(int rows, int cols, double fill) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("image dimensions must be at least 1x1, got " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
    }
    px_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill);
}

Image Image::from_pixels(int rows, int cols, std::vector<double> px) {
    Image img(rows, cols);
    if (px.size() != img.size()) {
        throw std::invalid_argument("pixel buffer length " + std::to_string(px.size()) +
                                    " does not match " + std::to_string(rows) + "x" +
                                    std::to_string(cols));
    }
    img.px_ = std::move(px);
    return img;
}

}  // namespace denoise
