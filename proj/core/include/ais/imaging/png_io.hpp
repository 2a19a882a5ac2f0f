#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "ais/imaging/raster.hpp"

namespace ais::imaging {

/// Decodes 8-bit (or lower, expanded) gray/rgb PNG data. Alpha is composited
/// over white; 16-bit data is reduced to 8 bits; palettes are expanded.
/// Throws InvalidInput on undecodable data.
RasterImage decode_png(std::span<const std::uint8_t> bytes);

/// Encodes rgb8 as RGB and gray8/binary as 8-bit gray. The byte stream is a
/// pure function of the image (fixed compression settings, no timestamps).
std::vector<std::uint8_t> encode_png(const RasterImage& img);

RasterImage read_png(const std::filesystem::path& path);
void write_png(const std::filesystem::path& path, const RasterImage& img);

}  // namespace ais::imaging
