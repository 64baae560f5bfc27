#pragma once

#include <string>
#include <vector>

#include "edgechroma/gradient.hpp"
#include "edgechroma/image.hpp"

namespace edgechroma {

struct ColorStop {
    double position = 0.0;  // in [0, 1]
    Rgb8 color;
    double width = 0.0;     // segment maps only; >= 0

    bool operator==(const ColorStop&) const = default;
};

/// Half-up rounding to an 8-bit channel, the quantization rule used wherever
/// float color values become bytes.
std::uint8_t quantize_channel(double value);

enum class InterpMode {
    linear,   // channel-wise interpolation between adjacent stops
    segment,  // piecewise constant, segment widths from stop widths
};

/// Maps normalized values in [0, 1] to RGB colors.
class ColorMap {
public:
    /// Validates the stop list: at least one stop, positions in [0, 1].
    /// Linear maps need strictly ascending positions, spanning 0..1 when
    /// there are two or more stops. Segment widths must sum to 1 (1e-9).
    ColorMap(std::vector<ColorStop> stops, InterpMode mode);

    /// Sample at u; values outside [0, 1] are clamped. Linear maps
    /// interpolate channel-wise and round half-up; segment maps return the
    /// color of the cumulative-width interval containing u (right-open,
    /// last interval right-closed).
    Rgb8 sample(double u) const;

    InterpMode mode() const noexcept { return mode_; }
    const std::vector<ColorStop>& stops() const noexcept { return stops_; }

    bool operator==(const ColorMap&) const = default;

private:
    std::vector<ColorStop> stops_;
    InterpMode mode_;
};

/// Fixed built-in maps, one or more per family:
///   "ember", "ocean"  sequential (dark-to-bright ramps)
///   "polar"           diverging (blue through light gray to red)
///   "wheel"           cyclic (hue circle, sample(0) == sample(1))
///   "contrast"        qualitative (6 distinct segment colors)
/// Throws std::invalid_argument for unknown names, listing the valid ones.
ColorMap builtin_colormap(const std::string& name);
std::vector<std::string> builtin_colormap_names();

/// GCMAP text format round-trip. load throws edgechroma::ParseError with the
/// offending line number for malformed content and edgechroma::Error for
/// invariant violations or I/O failure.
ColorMap load_colormap(const std::string& path);
void save_colormap(const ColorMap& map, const std::string& path);

/// Domain over which the direction plane is min-max normalized before
/// color lookup.
enum class NormalizationDomain {
    edge_pixels,  // min/max of theta over mask-true pixels (default)
    all_pixels,   // min/max of theta over the whole plane
};

/// Directional pseudo-coloring: non-edge pixels become (0,0,0); edge pixels
/// get sample(map, (theta - min) / (max - min)). A degenerate range maps
/// every edge pixel to u = 0.
RgbImage pseudo_color(const EdgeMask& mask, const ScalarField& theta,
                      const ColorMap& map,
                      NormalizationDomain domain = NormalizationDomain::edge_pixels);

}  // namespace edgechroma
