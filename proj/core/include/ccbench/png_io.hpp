#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace ccbench {

struct Rgb16Image {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint16_t> samples;  // interleaved RGB
};

/// Reads an RGB PNG. 8-bit files are widened (v * 257); palette, gray and
/// alpha variants are converted to plain RGB. Throws MissingFile or
/// CorruptRaster.
Rgb16Image read_png_rgb16(const std::filesystem::path& path);

/// Writes a 16-bit RGB PNG. Throws IoError.
void write_png_rgb16(const std::filesystem::path& path, const Rgb16Image& image);

/// Writes an 8-bit RGB PNG. Throws IoError.
void write_png_rgb8(const std::filesystem::path& path, std::size_t width, std::size_t height,
                    std::span<const std::uint8_t> samples);

}  // namespace ccbench
