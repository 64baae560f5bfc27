#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "edgechroma/colormap.hpp"
#include "edgechroma/image.hpp"

namespace edgechroma {

/// Dominant colors of a style image: k-means centroids (float channels in
/// [0, 255]) with the fraction of pixels assigned to each.
struct Palette {
    std::vector<std::array<double, 3>> colors;
    std::vector<double> weights;

    int k() const noexcept { return static_cast<int>(colors.size()); }
};

struct KMeansConfig {
    int k = 5;
    std::uint64_t seed = 0;
    int max_iterations = 100;
    double tolerance = 1e-4;  // max centroid movement, RGB units
};

/// Optional per-run instrumentation filled in by kmeans_palette.
struct KMeansTrace {
    std::vector<double> objective;  // sum of squared distances, per iteration
    int iterations = 0;
    bool converged = false;
    int requested_k = 0;  // k before any distinct-color reduction
    int k = 0;            // k actually clustered with
};

/// Lloyd's algorithm over pixels in RGB space, k-means++ initialization
/// seeded by cfg.seed. If k exceeds the number of distinct colors it is
/// reduced to that count (visible as palette.k()). Images larger than
/// 512x512 are uniformly subsampled to 262144 pixels using the same seed.
/// Deterministic for fixed (image, cfg). Throws std::invalid_argument for
/// invalid cfg.
Palette kmeans_palette(const RgbImage& style, const KMeansConfig& cfg,
                       KMeansTrace* trace = nullptr);

enum class StartPolicy {
    darkest,  // lowest BT.601 luma, ties by index (deterministic default)
    random,   // seeded uniform pick
};

/// Greedy chain ordering: after the start color, repeatedly append the
/// unused color nearest (Euclidean RGB distance) to the last appended one,
/// ties by lowest original index. Weights are permuted alongside.
Palette order_palette(const Palette& palette,
                      StartPolicy policy = StartPolicy::darkest,
                      std::uint64_t seed = 0);

/// Segment-mode map whose i-th segment is the rounded i-th centroid with
/// width equal to its weight. Expects an ordered palette.
ColorMap palette_to_colormap(const Palette& ordered);

/// Full pipeline: learn a color map from the style image, detect edges in
/// the content image, pseudo-color them.
RgbImage style_transfer(const RgbImage& content, const RgbImage& style,
                        double t, const KMeansConfig& cfg,
                        StartPolicy start = StartPolicy::darkest,
                        KMeansTrace* trace = nullptr);

}  // namespace edgechroma
