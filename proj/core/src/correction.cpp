#include "ccbench/correction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "ccbench/png_io.hpp"

namespace ccbench {

WhiteBalanceGains white_balance_gains(const Chromaticity& illuminant) {
  const double green = 1.0 / illuminant.g();
  return {{(1.0 / illuminant.r()) / green, 1.0, (1.0 / illuminant.b()) / green}};
}

std::array<double, 3> apply_gains(const std::array<double, 3>& rgb, const WhiteBalanceGains& gains) {
  return {rgb[0] * gains.gain[0], rgb[1] * gains.gain[1], rgb[2] * gains.gain[2]};
}

CorrectedImage apply_white_balance(const SceneRecord& record, const Chromaticity& illuminant) {
  const Raster& r = record.raster;
  CorrectedImage out{r.width, r.height, std::vector<double>(r.samples.size()), white_balance_gains(illuminant)};
  const double range = static_cast<double>(r.saturation_level - r.black_level);
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    const double signal = std::max(0.0, static_cast<double>(r.samples[i]) - r.black_level);
    out.samples[i] = std::clamp(signal * out.applied_gains.gain[i % 3] / range, 0.0, 1.0);
  }
  return out;
}

CorrectedImage apply_white_balance(const CorrectedImage& image, const Chromaticity& illuminant) {
  CorrectedImage out = image;
  const WhiteBalanceGains gains = white_balance_gains(illuminant);
  for (std::size_t i = 0; i < out.samples.size(); ++i) {
    out.samples[i] = std::clamp(out.samples[i] * gains.gain[i % 3], 0.0, 1.0);
  }
  for (int c = 0; c < 3; ++c) out.applied_gains.gain[c] *= gains.gain[c];
  return out;
}

void write_preview_png(const std::filesystem::path& path, const CorrectedImage& image) {
  std::vector<std::uint8_t> bytes(image.samples.size());
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    bytes[i] = static_cast<std::uint8_t>(std::lround(255.0 * std::pow(image.samples[i], 1.0 / 2.2)));
  }
  write_png_rgb8(path, image.width, image.height, bytes);
}

}  // namespace ccbench
