#include "edgechroma/colormap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace edgechroma {
namespace {

constexpr double kWidthSumTolerance = 1e-9;

}  // namespace

std::uint8_t quantize_channel(double value) {
    const double rounded = std::floor(value + 0.5);  // half-up
    if (rounded <= 0.0) return 0;
    if (rounded >= 255.0) return 255;
    return static_cast<std::uint8_t>(rounded);
}

ColorMap::ColorMap(std::vector<ColorStop> stops, InterpMode mode)
    : stops_(std::move(stops)), mode_(mode) {
    if (stops_.empty()) {
        throw std::invalid_argument("color map needs at least one stop");
    }
    for (const ColorStop& s : stops_) {
        if (!(s.position >= 0.0 && s.position <= 1.0)) {
            throw std::invalid_argument("stop position " +
                                        std::to_string(s.position) +
                                        " outside [0, 1]");
        }
        if (!(s.width >= 0.0)) {
            throw std::invalid_argument("stop width must be >= 0");
        }
    }
    if (mode_ == InterpMode::linear) {
        for (std::size_t i = 1; i < stops_.size(); ++i) {
            if (!(stops_[i - 1].position < stops_[i].position)) {
                throw std::invalid_argument(
                    "linear map stops must be strictly ascending by position");
            }
        }
        if (stops_.size() >= 2 &&
            (stops_.front().position != 0.0 || stops_.back().position != 1.0)) {
            throw std::invalid_argument(
                "linear map stops must span positions 0.0 to 1.0");
        }
    } else {
        double sum = 0.0;
        for (const ColorStop& s : stops_) {
            sum += s.width;
        }
        if (std::abs(sum - 1.0) > kWidthSumTolerance) {
            throw std::invalid_argument("segment widths must sum to 1.0, got " +
                                        std::to_string(sum));
        }
    }
}

Rgb8 ColorMap::sample(double u) const {
    u = std::clamp(u, 0.0, 1.0);
    if (stops_.size() == 1) {
        return stops_[0].color;
    }
    if (mode_ == InterpMode::segment) {
        double cumulative = 0.0;
        for (std::size_t i = 0; i + 1 < stops_.size(); ++i) {
            cumulative += stops_[i].width;
            if (u < cumulative) {
                return stops_[i].color;  // right-open interval
            }
        }
        return stops_.back().color;  // last interval right-closed
    }

    // Linear: find the bracketing pair, interpolate channel-wise.
    std::size_t hi = 1;
    while (hi + 1 < stops_.size() && u > stops_[hi].position) {
        ++hi;
    }
    const ColorStop& a = stops_[hi - 1];
    const ColorStop& b = stops_[hi];
    const double t = (u - a.position) / (b.position - a.position);
    const auto lerp = [t](std::uint8_t c0, std::uint8_t c1) {
        return quantize_channel(static_cast<double>(c0) +
                                (static_cast<double>(c1) - static_cast<double>(c0)) * t);
    };
    return {lerp(a.color.r, b.color.r), lerp(a.color.g, b.color.g),
            lerp(a.color.b, b.color.b)};
}

RgbImage pseudo_color(const EdgeMask& mask, const ScalarField& theta,
                      const ColorMap& map, NormalizationDomain domain) {
    if (mask.width() != theta.width() || mask.height() != theta.height()) {
        throw std::invalid_argument(
            "pseudo_color: mask and direction plane dimensions differ");
    }

    double theta_min = std::numeric_limits<double>::infinity();
    double theta_max = -std::numeric_limits<double>::infinity();
    const double* angles = theta.data();
    const std::size_t n = theta.size();
    if (domain == NormalizationDomain::all_pixels) {
        for (std::size_t i = 0; i < n; ++i) {
            theta_min = std::min(theta_min, angles[i]);
            theta_max = std::max(theta_max, angles[i]);
        }
    } else {
        const std::uint8_t* bits = mask.bits().data();
        for (std::size_t i = 0; i < n; ++i) {
            if (bits[i]) {
                theta_min = std::min(theta_min, angles[i]);
                theta_max = std::max(theta_max, angles[i]);
            }
        }
    }

    RgbImage out(mask.width(), mask.height());
    const bool degenerate = !(theta_max > theta_min);
    const double range = theta_max - theta_min;
    const std::uint8_t* bits = mask.bits().data();
    for (int y = 0; y < mask.height(); ++y) {
        for (int x = 0; x < mask.width(); ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * mask.width() + x;
            if (!bits[i]) {
                continue;  // stays (0, 0, 0)
            }
            const double u = degenerate ? 0.0 : (angles[i] - theta_min) / range;
            out.set_pixel(x, y, map.sample(u));
        }
    }
    return out;
}

}  // namespace edgechroma
