#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <vector>

#include "ccbench/color.hpp"
#include "ccbench/dataset.hpp"

namespace ccbench {

/// Per-channel von Kries gains, normalized so the green gain is 1.
struct WhiteBalanceGains {
  std::array<double, 3> gain{1.0, 1.0, 1.0};
};

WhiteBalanceGains white_balance_gains(const Chromaticity& illuminant);

/// Multiplies a colour by the gains, without clamping.
std::array<double, 3> apply_gains(const std::array<double, 3>& rgb, const WhiteBalanceGains& gains);

/// Linear RGB in [0, 1], interleaved.
struct CorrectedImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<double> samples;
  WhiteBalanceGains applied_gains;

  const double* pixel(std::size_t x, std::size_t y) const noexcept { return samples.data() + 3 * (y * width + x); }
};

/// (raw - black) * gain / (saturation - black), clamped to [0, 1].
CorrectedImage apply_white_balance(const SceneRecord& record, const Chromaticity& illuminant);

/// Re-applies gains to an already corrected image, clamped to [0, 1].
CorrectedImage apply_white_balance(const CorrectedImage& image, const Chromaticity& illuminant);

/// Writes an 8-bit preview with a 1/2.2 display gamma. Inspection only.
void write_preview_png(const std::filesystem::path& path, const CorrectedImage& image);

}  // namespace ccbench
