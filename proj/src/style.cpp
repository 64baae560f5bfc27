#include "edgechroma/style.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgechroma/gradient.hpp"
#include "kernels/kernel_table.hpp"

namespace edgechroma {
namespace {

// Pixel budget above which the style image is subsampled (512 * 512).
constexpr std::size_t kMaxClusterPixels = 262144;

double dist2(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    const double dr = a[0] - b[0];
    const double dg = a[1] - b[1];
    const double db = a[2] - b[2];
    return dr * dr + dg * dg + db * db;
}

// Unbiased index draw from the raw engine; std::uniform_int_distribution is
// implementation-defined, this is not.
std::uint64_t pick_index(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t reject_above =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= reject_above);
    return x % bound;
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct PixelSet {
    std::vector<double> r, g, b;

    std::size_t size() const { return r.size(); }
    std::array<double, 3> at(std::size_t i) const { return {r[i], g[i], b[i]}; }
};

// All pixels, or a uniform sample of kMaxClusterPixels of them (Floyd's
// m-of-n selection, emitted in raster order).
PixelSet working_pixels(const RgbImage& image, std::mt19937_64& rng) {
    const std::size_t total = image.pixel_count();
    std::vector<std::size_t> indices;
    if (total <= kMaxClusterPixels) {
        indices.resize(total);
        for (std::size_t i = 0; i < total; ++i) {
            indices[i] = i;
        }
    } else {
        std::vector<std::uint8_t> chosen(total, 0);
        for (std::size_t j = total - kMaxClusterPixels; j < total; ++j) {
            const std::size_t t = pick_index(rng, j + 1);
            if (chosen[t]) {
                chosen[j] = 1;
            } else {
                chosen[t] = 1;
            }
        }
        indices.reserve(kMaxClusterPixels);
        for (std::size_t i = 0; i < total; ++i) {
            if (chosen[i]) {
                indices.push_back(i);
            }
        }
    }

    PixelSet pixels;
    pixels.r.reserve(indices.size());
    pixels.g.reserve(indices.size());
    pixels.b.reserve(indices.size());
    const std::uint8_t* data = image.data();
    for (std::size_t i : indices) {
        pixels.r.push_back(static_cast<double>(data[3 * i]));
        pixels.g.push_back(static_cast<double>(data[3 * i + 1]));
        pixels.b.push_back(static_cast<double>(data[3 * i + 2]));
    }
    return pixels;
}

std::size_t count_distinct_colors(const PixelSet& pixels) {
    std::vector<std::uint64_t> seen((1u << 24) / 64, 0);
    std::size_t distinct = 0;
    for (std::size_t i = 0; i < pixels.size(); ++i) {
        const std::uint32_t key = (static_cast<std::uint32_t>(pixels.r[i]) << 16) |
                                  (static_cast<std::uint32_t>(pixels.g[i]) << 8) |
                                  static_cast<std::uint32_t>(pixels.b[i]);
        const std::uint64_t bit = 1ull << (key & 63);
        if (!(seen[key >> 6] & bit)) {
            seen[key >> 6] |= bit;
            ++distinct;
        }
    }
    return distinct;
}

std::vector<std::array<double, 3>> kmeanspp_init(const PixelSet& pixels, int k,
                                                 std::mt19937_64& rng) {
    const std::size_t n = pixels.size();
    std::vector<std::array<double, 3>> centers;
    centers.reserve(k);
    centers.push_back(pixels.at(pick_index(rng, n)));

    std::vector<double> min_dist(n);
    for (std::size_t i = 0; i < n; ++i) {
        min_dist[i] = dist2(pixels.at(i), centers[0]);
    }

    while (static_cast<int>(centers.size()) < k) {
        double total = 0.0;
        for (double d : min_dist) {
            total += d;
        }
        if (!(total > 0.0)) {
            break;  // every pixel coincides with a center
        }
        const double target = uniform01(rng) * total;
        std::size_t picked = n;
        double cumulative = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            cumulative += min_dist[i];
            if (target < cumulative) {
                picked = i;
                break;
            }
        }
        if (picked == n) {
            // FP dust pushed the target past the sum; take the farthest point.
            picked = static_cast<std::size_t>(
                std::max_element(min_dist.begin(), min_dist.end()) -
                min_dist.begin());
        }
        centers.push_back(pixels.at(picked));
        for (std::size_t i = 0; i < n; ++i) {
            min_dist[i] = std::min(min_dist[i], dist2(pixels.at(i), centers.back()));
        }
    }
    return centers;
}

double kahan_sum(const std::vector<double>& values) {
    double sum = 0.0;
    double carry = 0.0;
    for (double v : values) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double luma_of(const std::array<double, 3>& color) {
    return 0.299 * color[0] + 0.587 * color[1] + 0.114 * color[2];
}

}  // namespace

Palette kmeans_palette(const RgbImage& style, const KMeansConfig& cfg,
                       KMeansTrace* trace) {
    if (cfg.k < 1) {
        throw std::invalid_argument("k must be >= 1, got " + std::to_string(cfg.k));
    }
    if (cfg.max_iterations < 1) {
        throw std::invalid_argument("max_iterations must be >= 1");
    }
    if (!(cfg.tolerance >= 0.0)) {
        throw std::invalid_argument("tolerance must be >= 0");
    }

    std::mt19937_64 rng(cfg.seed);
    const PixelSet pixels = working_pixels(style, rng);
    const std::size_t n = pixels.size();

    int k = cfg.k;
    const std::size_t distinct = count_distinct_colors(pixels);
    if (static_cast<std::size_t>(k) > distinct) {
        k = static_cast<int>(distinct);
    }
    if (trace) {
        *trace = {};
        trace->requested_k = cfg.k;
    }

    std::vector<std::array<double, 3>> centers = kmeanspp_init(pixels, k, rng);
    k = static_cast<int>(centers.size());

    std::vector<double> cr(k), cg(k), cb(k);
    std::vector<std::uint32_t> assign(n);
    std::vector<double> point_dist2(n);
    std::vector<std::size_t> counts(k);
    bool converged = false;
    int iterations = 0;

    for (int iter = 0; iter < cfg.max_iterations; ++iter) {
        for (int c = 0; c < k; ++c) {
            cr[c] = centers[c][0];
            cg[c] = centers[c][1];
            cb[c] = centers[c][2];
        }
        kernels::active().nearest_centroid(pixels.r.data(), pixels.g.data(),
                                           pixels.b.data(), n, cr.data(),
                                           cg.data(), cb.data(), k,
                                           assign.data(), point_dist2.data());
        ++iterations;
        if (trace) {
            trace->objective.push_back(kahan_sum(point_dist2));
        }

        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            ++counts[assign[i]];
        }

        // Empty clusters grab the pixel farthest from its current centroid.
        // Donors need at least two members so the fix never empties another
        // cluster; one always exists because k never exceeds n.
        for (int c = 0; c < k; ++c) {
            if (counts[c] != 0) {
                continue;
            }
            std::size_t farthest = n;
            for (std::size_t i = 0; i < n; ++i) {
                if (counts[assign[i]] < 2) {
                    continue;
                }
                if (farthest == n || point_dist2[i] > point_dist2[farthest]) {
                    farthest = i;
                }
            }
            --counts[assign[farthest]];
            assign[farthest] = static_cast<std::uint32_t>(c);
            point_dist2[farthest] = 0.0;
            counts[c] = 1;
        }

        std::vector<std::array<double, 3>> sums(k, {0.0, 0.0, 0.0});
        for (std::size_t i = 0; i < n; ++i) {
            std::array<double, 3>& s = sums[assign[i]];
            s[0] += pixels.r[i];
            s[1] += pixels.g[i];
            s[2] += pixels.b[i];
        }
        double movement = 0.0;
        for (int c = 0; c < k; ++c) {
            const double inv = 1.0 / static_cast<double>(counts[c]);
            const std::array<double, 3> updated = {sums[c][0] * inv,
                                                   sums[c][1] * inv,
                                                   sums[c][2] * inv};
            movement = std::max(movement, std::sqrt(dist2(updated, centers[c])));
            centers[c] = updated;
        }
        if (movement < cfg.tolerance || movement == 0.0) {
            converged = true;
            break;
        }
    }

    Palette palette;
    palette.colors = std::move(centers);
    palette.weights.resize(k);
    for (int c = 0; c < k; ++c) {
        palette.weights[c] =
            static_cast<double>(counts[c]) / static_cast<double>(n);
    }
    if (trace) {
        trace->iterations = iterations;
        trace->converged = converged;
        trace->k = k;
    }
    return palette;
}

Palette order_palette(const Palette& palette, StartPolicy policy,
                      std::uint64_t seed) {
    const std::size_t n = palette.colors.size();
    if (n == 0 || palette.weights.size() != n) {
        throw std::invalid_argument("palette must have matching, non-empty "
                                    "color and weight lists");
    }

    std::size_t start = 0;
    if (policy == StartPolicy::random) {
        std::mt19937_64 rng(seed);
        start = pick_index(rng, n);
    } else {
        for (std::size_t i = 1; i < n; ++i) {
            if (luma_of(palette.colors[i]) < luma_of(palette.colors[start])) {
                start = i;
            }
        }
    }

    std::vector<bool> used(n, false);
    std::vector<std::size_t> order;
    order.reserve(n);
    order.push_back(start);
    used[start] = true;
    while (order.size() < n) {
        const std::array<double, 3>& last = palette.colors[order.back()];
        std::size_t best = n;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i]) {
                continue;
            }
            const double d = dist2(last, palette.colors[i]);
            if (d < best_d) {
                best_d = d;
                best = i;
            }
        }
        order.push_back(best);
        used[best] = true;
    }

    Palette result;
    result.colors.reserve(n);
    result.weights.reserve(n);
    for (std::size_t i : order) {
        result.colors.push_back(palette.colors[i]);
        result.weights.push_back(palette.weights[i]);
    }
    return result;
}

ColorMap palette_to_colormap(const Palette& ordered) {
    std::vector<ColorStop> stops;
    stops.reserve(ordered.colors.size());
    double cumulative = 0.0;
    for (std::size_t i = 0; i < ordered.colors.size(); ++i) {
        ColorStop stop;
        stop.position = std::min(cumulative, 1.0);
        stop.color = {quantize_channel(ordered.colors[i][0]),
                      quantize_channel(ordered.colors[i][1]),
                      quantize_channel(ordered.colors[i][2])};
        stop.width = ordered.weights[i];
        stops.push_back(stop);
        cumulative += ordered.weights[i];
    }
    return ColorMap(std::move(stops), InterpMode::segment);
}

RgbImage style_transfer(const RgbImage& content, const RgbImage& style,
                        double t, const KMeansConfig& cfg, StartPolicy start,
                        KMeansTrace* trace) {
    const Palette palette = kmeans_palette(style, cfg, trace);
    const Palette ordered = order_palette(palette, start, cfg.seed);
    const ColorMap map = palette_to_colormap(ordered);
    const EdgeDetection detection = detect_edges(content, t);
    return pseudo_color(detection.mask, detection.gradient.direction, map);
}

}  // namespace edgechroma
