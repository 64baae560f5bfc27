#include <stdexcept>
#include <string>
#include <vector>

#include "edgechroma/colormap.hpp"

namespace edgechroma {
namespace {

struct BuiltinEntry {
    const char* name;
    ColorMap (*make)();
};

// Sequential: dark-to-bright single-hue ramps. Every channel is
// non-decreasing across stops, which keeps luminance monotone.
ColorMap make_ember() {
    return ColorMap({{0.00, {0, 0, 0}},
                     {0.30, {110, 20, 8}},
                     {0.65, {225, 110, 30}},
                     {1.00, {255, 236, 170}}},
                    InterpMode::linear);
}

ColorMap make_ocean() {
    return ColorMap({{0.00, {3, 10, 48}},
                     {0.35, {18, 60, 120}},
                     {0.70, {60, 140, 190}},
                     {1.00, {210, 245, 255}}},
                    InterpMode::linear);
}

// Diverging: two hues meeting at a light midpoint.
ColorMap make_polar() {
    return ColorMap({{0.00, {33, 102, 172}},
                     {0.25, {146, 197, 222}},
                     {0.50, {243, 243, 243}},
                     {0.75, {214, 96, 77}},
                     {1.00, {178, 24, 43}}},
                    InterpMode::linear);
}

// Cyclic: hue circle, endpoints match so sample(0) == sample(1).
ColorMap make_wheel() {
    return ColorMap({{0.0, {255, 0, 0}},
                     {1.0 / 6.0, {255, 255, 0}},
                     {2.0 / 6.0, {0, 255, 0}},
                     {3.0 / 6.0, {0, 255, 255}},
                     {4.0 / 6.0, {0, 0, 255}},
                     {5.0 / 6.0, {255, 0, 255}},
                     {1.0, {255, 0, 0}}},
                    InterpMode::linear);
}

// Qualitative: six distinct hues, equal segments.
ColorMap make_contrast() {
    const double w = 1.0 / 6.0;
    return ColorMap({{0.0 * w, {230, 25, 75}, w},
                     {1.0 * w, {60, 180, 75}, w},
                     {2.0 * w, {255, 225, 25}, w},
                     {3.0 * w, {0, 130, 200}, w},
                     {4.0 * w, {245, 130, 48}, w},
                     {5.0 * w, {145, 30, 180}, w}},
                    InterpMode::segment);
}

constexpr BuiltinEntry kBuiltins[] = {
    {"ember", make_ember},   {"ocean", make_ocean}, {"polar", make_polar},
    {"wheel", make_wheel},   {"contrast", make_contrast},
};

}  // namespace

ColorMap builtin_colormap(const std::string& name) {
    for (const BuiltinEntry& entry : kBuiltins) {
        if (name == entry.name) {
            return entry.make();
        }
    }
    std::string valid;
    for (const BuiltinEntry& entry : kBuiltins) {
        if (!valid.empty()) {
            valid += ", ";
        }
        valid += entry.name;
    }
    throw std::invalid_argument("unknown color map '" + name +
                                "' (valid names: " + valid + ")");
}

std::vector<std::string> builtin_colormap_names() {
    std::vector<std::string> names;
    for (const BuiltinEntry& entry : kBuiltins) {
        names.emplace_back(entry.name);
    }
    return names;
}

}  // namespace edgechroma
