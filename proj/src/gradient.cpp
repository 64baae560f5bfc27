#include "edgechroma/gradient.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "kernels/kernel_table.hpp"

namespace edgechroma {
namespace {

void check_same_dimensions(const ScalarField& a, const ScalarField& b,
                           const char* what) {
    if (a.width() != b.width() || a.height() != b.height()) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a.width()) + "x" +
                                    std::to_string(a.height()) + " vs " +
                                    std::to_string(b.width()) + "x" +
                                    std::to_string(b.height()) + ")");
    }
}

}  // namespace

EdgeMask::EdgeMask(int width, int height) : width_(width), height_(height) {
    if (width < 1 || height < 1) {
        throw std::invalid_argument("mask dimensions must be at least 1x1");
    }
    bits_.assign(static_cast<std::size_t>(width) * height, 0);
}

const Kernel& blur_kernel() {
    static const Kernel kernel(3, {1, 2, 1, 2, 4, 2, 1, 2, 1}, 1.0 / 16.0);
    return kernel;
}

const Kernel& sobel_x_kernel() {
    static const Kernel kernel(3, {1, 0, -1, 2, 0, -2, 1, 0, -1});
    return kernel;
}

const Kernel& sobel_y_kernel() {
    static const Kernel kernel(3, {1, 2, 1, 0, 0, 0, -1, -2, -1});
    return kernel;
}

ScalarField gaussian_blur(const ScalarField& gray) {
    ScalarField out(gray.width(), gray.height());
    kernels::active().blur3(gray.data(), gray.width(), gray.height(), out.data());
    return out;
}

SobelDerivatives sobel_derivatives(const ScalarField& blurred) {
    ScalarField dx(blurred.width(), blurred.height());
    ScalarField dy(blurred.width(), blurred.height());
    kernels::active().sobel(blurred.data(), blurred.width(), blurred.height(),
                            dx.data(), dy.data());
    return {std::move(dx), std::move(dy)};
}

ScalarField magnitude(const ScalarField& dx, const ScalarField& dy) {
    check_same_dimensions(dx, dy, "magnitude");
    ScalarField out(dx.width(), dx.height());
    kernels::active().magnitude(dx.data(), dy.data(), out.data(), dx.size());
    return out;
}

ScalarField direction(const ScalarField& dx, const ScalarField& dy) {
    check_same_dimensions(dx, dy, "direction");
    ScalarField out(dx.width(), dx.height());
    const double* px = dx.data();
    const double* py = dy.data();
    double* theta = out.data();
    const std::size_t n = dx.size();
    for (std::size_t i = 0; i < n; ++i) {
        theta[i] = (px[i] == 0.0 && py[i] == 0.0) ? 0.0 : std::atan2(px[i], py[i]);
    }
    return out;
}

EdgeMask threshold(const ScalarField& magnitude, double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::invalid_argument("threshold must be in [0, 1], got " +
                                    std::to_string(t));
    }
    EdgeMask mask(magnitude.width(), magnitude.height());
    const double max =
        *std::max_element(magnitude.values().begin(), magnitude.values().end());
    if (max <= 0.0) {
        return mask;  // flat plane, no edges
    }
    const double* g = magnitude.data();
    for (int y = 0; y < magnitude.height(); ++y) {
        for (int x = 0; x < magnitude.width(); ++x) {
            const double normalized = g[static_cast<std::size_t>(y) * magnitude.width() + x] / max;
            mask.set(x, y, normalized >= t);
        }
    }
    return mask;
}

EdgeDetection detect_edges(const RgbImage& image, double t) {
    const ScalarField gray = to_grayscale(image);
    const ScalarField blurred = gaussian_blur(gray);
    SobelDerivatives d = sobel_derivatives(blurred);
    ScalarField mag = magnitude(d.dx, d.dy);
    ScalarField dir = direction(d.dx, d.dy);
    EdgeMask mask = threshold(mag, t);
    return {GradientField{std::move(d.dx), std::move(d.dy), std::move(mag),
                          std::move(dir)},
            std::move(mask)};
}

}  // namespace edgechroma
