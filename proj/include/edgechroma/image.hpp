#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace edgechroma {

struct Rgb8 {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    bool operator==(const Rgb8&) const = default;
};

/// 8-bit RGB raster, row-major, interleaved channels.
class RgbImage {
public:
    RgbImage(int width, int height);
    RgbImage(int width, int height, std::vector<std::uint8_t> interleaved_rgb);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t pixel_count() const noexcept {
        return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
    }

    Rgb8 pixel(int x, int y) const {
        const std::uint8_t* p = data_.data() + 3 * index(x, y);
        return {p[0], p[1], p[2]};
    }
    void set_pixel(int x, int y, Rgb8 c) {
        std::uint8_t* p = data_.data() + 3 * index(x, y);
        p[0] = c.r;
        p[1] = c.g;
        p[2] = c.b;
    }

    const std::uint8_t* data() const noexcept { return data_.data(); }
    std::uint8_t* data() noexcept { return data_.data(); }
    const std::vector<std::uint8_t>& bytes() const noexcept { return data_; }

    bool operator==(const RgbImage&) const = default;

private:
    std::size_t index(int x, int y) const noexcept {
        return static_cast<std::size_t>(y) * width_ + x;
    }

    int width_;
    int height_;
    std::vector<std::uint8_t> data_;  // 3 * width * height bytes
};

/// Row-major 2D grid of doubles: grayscale plane, derivative, magnitude
/// or direction. Values are always finite.
class ScalarField {
public:
    ScalarField(int width, int height, double fill = 0.0);
    ScalarField(int width, int height, std::vector<double> values);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t size() const noexcept { return data_.size(); }

    double at(int x, int y) const { return data_[index(x, y)]; }
    double& at(int x, int y) { return data_[index(x, y)]; }

    const double* data() const noexcept { return data_.data(); }
    double* data() noexcept { return data_.data(); }
    const std::vector<double>& values() const noexcept { return data_; }

    bool operator==(const ScalarField&) const = default;

private:
    std::size_t index(int x, int y) const noexcept {
        return static_cast<std::size_t>(y) * width_ + x;
    }

    int width_;
    int height_;
    std::vector<double> data_;
};

/// Square odd-sized convolution kernel with a scalar normalizer that is
/// applied to every tap.
class Kernel {
public:
    Kernel(int size, std::vector<double> weights, double normalizer = 1.0);

    int size() const noexcept { return size_; }
    double normalizer() const noexcept { return normalizer_; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    double weight(int ky, int kx) const {
        return weights_[static_cast<std::size_t>(ky) * size_ + kx];
    }

private:
    int size_;
    std::vector<double> weights_;
    double normalizer_;
};

/// BT.601 luma: 0.299 R + 0.587 G + 0.114 B, kept as doubles (no rounding).
ScalarField to_grayscale(const RgbImage& image);

/// Cross-correlation (no kernel flip) in "same" mode with replicate padding.
/// Each output value is the sum over the window of value * weight * normalizer,
/// taps accumulated row-major.
ScalarField convolve(const ScalarField& field, const Kernel& kernel);

}  // namespace edgechroma
