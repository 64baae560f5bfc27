#pragma once

#include <cstdint>
#include <vector>

#include "edgechroma/image.hpp"

namespace edgechroma {

/// Per-pixel boolean edge map produced by thresholding.
class EdgeMask {
public:
    EdgeMask(int width, int height);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t size() const noexcept { return bits_.size(); }

    bool at(int x, int y) const { return bits_[index(x, y)] != 0; }
    void set(int x, int y, bool value) { bits_[index(x, y)] = value ? 1 : 0; }

    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

    bool operator==(const EdgeMask&) const = default;

private:
    std::size_t index(int x, int y) const noexcept {
        return static_cast<std::size_t>(y) * width_ + x;
    }

    int width_;
    int height_;
    std::vector<std::uint8_t> bits_;  // 0 or 1
};

/// Horizontal/vertical derivatives plus gradient magnitude and direction,
/// all on the same grid.
struct GradientField {
    ScalarField dx;
    ScalarField dy;
    ScalarField magnitude;
    ScalarField direction;  // radians, atan2(dx, dy)
};

struct SobelDerivatives {
    ScalarField dx;
    ScalarField dy;
};

struct EdgeDetection {
    GradientField gradient;
    EdgeMask mask;
};

/// The fixed 3x3 binomial blur kernel [1 2 1; 2 4 2; 1 2 1] / 16.
const Kernel& blur_kernel();
/// Horizontal Sobel filter [1 0 -1; 2 0 -2; 1 0 -1].
const Kernel& sobel_x_kernel();
/// Vertical Sobel filter [1 2 1; 0 0 0; -1 -2 -1].
const Kernel& sobel_y_kernel();

/// Blur with the fixed 3x3 kernel, replicate padding.
ScalarField gaussian_blur(const ScalarField& gray);

/// dx and dy Sobel derivatives of an (already blurred) plane.
SobelDerivatives sobel_derivatives(const ScalarField& blurred);

/// Per-pixel sqrt(dx^2 + dy^2). Throws std::invalid_argument on dimension
/// mismatch.
ScalarField magnitude(const ScalarField& dx, const ScalarField& dy);

/// Per-pixel quadrant-aware angle atan2(dx, dy); zero-gradient pixels get 0.
/// Throws std::invalid_argument on dimension mismatch.
ScalarField direction(const ScalarField& dx, const ScalarField& dy);

/// Normalize the magnitude plane by its global maximum, then mark pixels with
/// normalized value >= t. A flat plane (max == 0) yields an empty mask.
/// t must be in [0, 1].
EdgeMask threshold(const ScalarField& magnitude, double t);

/// Full pipeline: grayscale -> blur -> Sobel -> magnitude/direction -> mask.
EdgeDetection detect_edges(const RgbImage& image, double t);

}  // namespace edgechroma
