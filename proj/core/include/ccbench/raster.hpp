#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ccbench {

/// Interleaved 16-bit linear RGB image with its sensor levels.
struct Raster {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint16_t> samples;  // row-major, 3 per pixel
  int black_level = 0;
  int saturation_level = 65535;

  std::size_t pixel_count() const noexcept { return width * height; }

  const std::uint16_t* pixel(std::size_t x, std::size_t y) const noexcept {
    return samples.data() + 3 * (y * width + x);
  }
  std::uint16_t* pixel(std::size_t x, std::size_t y) noexcept {
    return samples.data() + 3 * (y * width + x);
  }

  friend bool operator==(const Raster&, const Raster&) = default;
};

}  // namespace ccbench
