#include "edgechroma/image.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "kernels/kernel_table.hpp"

namespace edgechroma {
namespace {

void check_dimensions(int width, int height) {
    if (width < 1 || height < 1) {
        throw std::invalid_argument("image dimensions must be at least 1x1, got " +
                                    std::to_string(width) + "x" +
                                    std::to_string(height));
    }
}

}  // namespace

RgbImage::RgbImage(int width, int height)
    : width_(width), height_(height) {
    check_dimensions(width, height);
    data_.assign(3 * pixel_count(), 0);
}

RgbImage::RgbImage(int width, int height, std::vector<std::uint8_t> interleaved_rgb)
    : width_(width), height_(height), data_(std::move(interleaved_rgb)) {
    check_dimensions(width, height);
    if (data_.size() != 3 * pixel_count()) {
        throw std::invalid_argument(
            "RGB data size " + std::to_string(data_.size()) +
            " does not match 3 * " + std::to_string(pixel_count()) + " pixels");
    }
}

ScalarField::ScalarField(int width, int height, double fill)
    : width_(width), height_(height) {
    check_dimensions(width, height);
    data_.assign(static_cast<std::size_t>(width) * height, fill);
}

ScalarField::ScalarField(int width, int height, std::vector<double> values)
    : width_(width), height_(height), data_(std::move(values)) {
    check_dimensions(width, height);
    if (data_.size() != static_cast<std::size_t>(width) * height) {
        throw std::invalid_argument(
            "field data size " + std::to_string(data_.size()) +
            " does not match " + std::to_string(width) + "x" +
            std::to_string(height));
    }
    for (double v : data_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("field values must be finite");
        }
    }
}

Kernel::Kernel(int size, std::vector<double> weights, double normalizer)
    : size_(size), weights_(std::move(weights)), normalizer_(normalizer) {
    if (size < 1 || size % 2 == 0) {
        throw std::invalid_argument("kernel size must be odd and positive, got " +
                                    std::to_string(size));
    }
    if (weights_.size() != static_cast<std::size_t>(size) * size) {
        throw std::invalid_argument("kernel needs " + std::to_string(size * size) +
                                    " weights, got " +
                                    std::to_string(weights_.size()));
    }
    for (double v : weights_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("kernel weights must be finite");
        }
    }
    if (!std::isfinite(normalizer)) {
        throw std::invalid_argument("kernel normalizer must be finite");
    }
}

ScalarField to_grayscale(const RgbImage& image) {
    ScalarField out(image.width(), image.height());
    kernels::active().grayscale(image.data(), out.data(), image.pixel_count());
    return out;
}

ScalarField convolve(const ScalarField& field, const Kernel& kernel) {
    ScalarField out(field.width(), field.height());
    kernels::active().convolve(field.data(), field.width(), field.height(),
                               kernel.weights().data(), kernel.size(),
                               kernel.normalizer(), out.data());
    return out;
}

}  // namespace edgechroma
