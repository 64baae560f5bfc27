#pragma once

#include <string>

#include "edgechroma/gradient.hpp"
#include "edgechroma/image.hpp"

namespace edgechroma {

/// Decode a PNG or JPEG file (recognized by magic bytes) into 8-bit RGB.
/// Grayscale, palette and alpha variants are converted. Throws
/// edgechroma::Error naming the path on any I/O or decode failure.
RgbImage load_image(const std::string& path);

/// Encode as 8-bit RGB PNG. Throws edgechroma::Error naming the path.
void save_png(const RgbImage& image, const std::string& path);

/// Encode an edge mask as 8-bit grayscale PNG, 255 for edges, 0 elsewhere.
void save_mask_png(const EdgeMask& mask, const std::string& path);

}  // namespace edgechroma
