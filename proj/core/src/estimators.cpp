#include "ccbench/estimators.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "ccbench/error.hpp"

namespace ccbench {
namespace {

using Rgb = std::array<double, 3>;

struct Region {
  std::size_t x0 = 0;
  std::size_t x1 = 0;
};

Region clip_columns(const Raster& r, ColumnRange columns) {
  Region region{std::min(columns.begin, r.width), std::min(columns.end, r.width)};
  if (region.x0 >= region.x1) {
    throw Error(ErrorCode::EmptyUsableRegion, "empty column range");
  }
  return region;
}

// Calls fn(x, y, rgb) for every usable pixel inside the column range.
template <typename Fn>
std::size_t for_each_usable(const SceneRecord& record, const UsableMask& mask, Region region, Fn&& fn) {
  const Raster& r = record.raster;
  std::size_t count = 0;
  for (std::size_t y = 0; y < r.height; ++y) {
    for (std::size_t x = region.x0; x < region.x1; ++x) {
      if (!mask.at(x, y)) continue;
      const std::uint16_t* p = r.pixel(x, y);
      fn(x, y, Rgb{static_cast<double>(p[0] - r.black_level), static_cast<double>(p[1] - r.black_level),
                   static_cast<double>(p[2] - r.black_level)});
      ++count;
    }
  }
  if (count == 0) {
    throw Error(ErrorCode::EmptyUsableRegion, record.id() + ": no usable pixels in range");
  }
  return count;
}

RawEstimate finish(Rgb v, const EstimatorConfig& config, ErrorCode on_zero) {
  const double top = std::max({v[0], v[1], v[2]});
  if (config.epsilon_floor > 0.0 && top > 0.0) {
    for (double& c : v) c = std::max(c, config.epsilon_floor * top);
  }
  if (!(v[0] > 0.0 && v[1] > 0.0 && v[2] > 0.0)) {
    throw Error(on_zero, "estimate has a zero channel");
  }
  return {v[0], v[1], v[2]};
}

// (mean x^p)^(1/p) evaluated relative to the maximum so large p cannot overflow.
Rgb minkowski_mean(const std::vector<Rgb>& values, double p) {
  Rgb top{0, 0, 0};
  for (const Rgb& v : values) {
    for (int c = 0; c < 3; ++c) top[c] = std::max(top[c], v[c]);
  }
  Rgb out{0, 0, 0};
  for (int c = 0; c < 3; ++c) {
    if (top[c] == 0.0) continue;
    double acc = 0.0;
    for (const Rgb& v : values) acc += std::pow(v[c] / top[c], p);
    out[c] = top[c] * std::pow(acc / static_cast<double>(values.size()), 1.0 / p);
  }
  return out;
}

std::vector<double> gaussian_kernel(double sigma) {
  const auto radius = static_cast<std::ptrdiff_t>(std::ceil(3.0 * sigma));
  std::vector<double> k(static_cast<std::size_t>(2 * radius + 1));
  for (std::ptrdiff_t i = -radius; i <= radius; ++i) {
    k[static_cast<std::size_t>(i + radius)] = std::exp(-0.5 * (i * i) / (sigma * sigma));
  }
  return k;
}

// Separable 1-D pass over a w x h plane (stride = channels), along x or y.
void convolve_axis(const std::vector<double>& src, std::vector<double>& dst, std::size_t w,
                   std::size_t h, std::size_t channels, const std::vector<double>& kernel, bool along_x) {
  const auto radius = static_cast<std::ptrdiff_t>(kernel.size() / 2);
  const auto extent = static_cast<std::ptrdiff_t>(along_x ? w : h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const auto pos = static_cast<std::ptrdiff_t>(along_x ? x : y);
      for (std::size_t c = 0; c < channels; ++c) {
        double acc = 0.0;
        for (std::ptrdiff_t k = -radius; k <= radius; ++k) {
          const std::ptrdiff_t q = pos + k;
          if (q < 0 || q >= extent) continue;
          const std::size_t idx = along_x ? (y * w + static_cast<std::size_t>(q))
                                          : (static_cast<std::size_t>(q) * w + x);
          acc += kernel[static_cast<std::size_t>(k + radius)] * src[idx * channels + c];
        }
        dst[(y * w + x) * channels + c] = acc;
      }
    }
  }
}

}  // namespace

void EstimatorConfig::validate() const {
  if (!(minkowski_p >= 1.0) || !std::isfinite(minkowski_p)) {
    throw Error(ErrorCode::InvalidConfig, "minkowski_p must be >= 1");
  }
  if (!(derivative_sigma >= 0.0) || !std::isfinite(derivative_sigma)) {
    throw Error(ErrorCode::InvalidConfig, "derivative_sigma must be >= 0");
  }
  if (!(saturation_fraction > 0.0 && saturation_fraction <= 1.0)) {
    throw Error(ErrorCode::InvalidConfig, "saturation_fraction must lie in (0, 1]");
  }
  if (!(epsilon_floor >= 0.0) || !std::isfinite(epsilon_floor)) {
    throw Error(ErrorCode::InvalidConfig, "epsilon_floor must be >= 0");
  }
}

RawEstimate gray_world(const SceneRecord& record, const EstimatorConfig& config, ColumnRange columns) {
  config.validate();
  const Region region = clip_columns(record.raster, columns);
  const UsableMask mask = usable_mask(record, config.saturation_fraction);
  Rgb sum{0, 0, 0};
  const std::size_t n = for_each_usable(record, mask, region, [&](std::size_t, std::size_t, const Rgb& v) {
    for (int c = 0; c < 3; ++c) sum[c] += v[c];
  });
  for (double& s : sum) s /= static_cast<double>(n);
  return finish(sum, config, ErrorCode::NonPositiveComponent);
}

RawEstimate max_rgb(const SceneRecord& record, const EstimatorConfig& config, ColumnRange columns) {
  config.validate();
  const Region region = clip_columns(record.raster, columns);
  const UsableMask mask = usable_mask(record, config.saturation_fraction);
  Rgb top{0, 0, 0};
  for_each_usable(record, mask, region, [&](std::size_t, std::size_t, const Rgb& v) {
    for (int c = 0; c < 3; ++c) top[c] = std::max(top[c], v[c]);
  });
  return finish(top, config, ErrorCode::NonPositiveComponent);
}

RawEstimate shades_of_gray(const SceneRecord& record, const EstimatorConfig& config, ColumnRange columns) {
  config.validate();
  const Region region = clip_columns(record.raster, columns);
  const UsableMask mask = usable_mask(record, config.saturation_fraction);
  std::vector<Rgb> values;
  values.reserve(mask.count);
  for_each_usable(record, mask, region, [&](std::size_t, std::size_t, const Rgb& v) { values.push_back(v); });
  return finish(minkowski_mean(values, config.minkowski_p), config, ErrorCode::NonPositiveComponent);
}

RawEstimate gray_edge(const SceneRecord& record, const EstimatorConfig& config, ColumnRange columns) {
  config.validate();
  const Raster& r = record.raster;
  const Region region = clip_columns(r, columns);
  const UsableMask mask = usable_mask(record, config.saturation_fraction);
  const std::size_t w = r.width;
  const std::size_t h = r.height;

  // Channels 0..2 hold weighted values, channel 3 the usability weight, so
  // one blur pass yields a normalized convolution over usable pixels only.
  std::vector<double> plane(w * h * 4, 0.0);
  std::vector<std::uint8_t> inside(w * h, 0);
  double signal_peak = 0.0;
  for_each_usable(record, mask, region, [&](std::size_t x, std::size_t y, const Rgb& v) {
    signal_peak = std::max({signal_peak, v[0], v[1], v[2]});
    double* p = &plane[(y * w + x) * 4];
    p[0] = v[0];
    p[1] = v[1];
    p[2] = v[2];
    p[3] = 1.0;
    inside[y * w + x] = 1;
  });

  if (config.derivative_sigma > 0.0) {
    const auto kernel = gaussian_kernel(config.derivative_sigma);
    std::vector<double> tmp(plane.size());
    convolve_axis(plane, tmp, w, h, 4, kernel, true);
    convolve_axis(tmp, plane, w, h, 4, kernel, false);
  }

  const auto smoothed = [&](std::size_t x, std::size_t y, int c) {
    const double* p = &plane[(y * w + x) * 4];
    return p[c] / p[3];
  };

  std::vector<Rgb> magnitudes;
  for (std::size_t y = 1; y + 1 < h; ++y) {
    for (std::size_t x = std::max<std::size_t>(region.x0, 1); x + 1 < region.x1; ++x) {
      if (!inside[y * w + x] || !inside[y * w + x - 1] || !inside[y * w + x + 1] ||
          !inside[(y - 1) * w + x] || !inside[(y + 1) * w + x]) {
        continue;
      }
      Rgb m;
      for (int c = 0; c < 3; ++c) {
        const double gx = 0.5 * (smoothed(x + 1, y, c) - smoothed(x - 1, y, c));
        const double gy = 0.5 * (smoothed(x, y + 1, c) - smoothed(x, y - 1, c));
        m[c] = std::hypot(gx, gy);
      }
      magnitudes.push_back(m);
    }
  }
  if (magnitudes.empty()) {
    throw Error(ErrorCode::EmptyUsableRegion, record.id() + ": no pixel with a complete derivative stencil");
  }
  Rgb energy = minkowski_mean(magnitudes, config.minkowski_p);
  // Blurring a flat patch leaves rounding residue around 1e-13 of the signal.
  for (double& e : energy) {
    if (e <= 1e-10 * signal_peak) e = 0.0;
  }
  return finish(energy, config, ErrorCode::DegenerateGradient);
}

Chromaticity constant_baseline(std::span<const Chromaticity> training) {
  if (training.empty()) throw Error(ErrorCode::EmptySample, "constant baseline needs training ground truths");
  RawEstimate sum;
  for (const Chromaticity& c : training) {
    sum.r += c.r();
    sum.g += c.g();
    sum.b += c.b();
  }
  const double n = static_cast<double>(training.size());
  return normalize({sum.r / n, sum.g / n, sum.b / n});
}

Estimator Estimator::from_name(std::string_view name, const EstimatorConfig& config) {
  config.validate();
  const std::string n(name);
  using M = SingleMethod;
  if (name == "gray_world") return {n, M::GrayWorld, 1, TwoIlluminantMode::Split, config};
  if (name == "max_rgb") return {n, M::MaxRgb, 1, TwoIlluminantMode::Split, config};
  if (name == "shades_of_gray") return {n, M::ShadesOfGray, 1, TwoIlluminantMode::Split, config};
  if (name == "gray_edge") return {n, M::GrayEdge, 1, TwoIlluminantMode::Split, config};
  if (name == "constant") return {n, M::Constant, 1, TwoIlluminantMode::Split, config};
  if (name == "split_gray_world") return {n, M::GrayWorld, 2, TwoIlluminantMode::Split, config};
  if (name == "dup_gray_world") return {n, M::GrayWorld, 2, TwoIlluminantMode::Duplicate, config};
  throw Error(ErrorCode::UnknownEstimator, "unknown estimator \"" + n + "\"");
}

Estimator Estimator::duplicated() const {
  if (arity_ != 1) throw Error(ErrorCode::ArityMismatch, name_ + " already reports two illuminants");
  Estimator e = *this;
  e.arity_ = 2;
  e.mode_ = TwoIlluminantMode::Duplicate;
  return e;
}

RawEstimate Estimator::estimate_single(const SceneRecord& record, ColumnRange columns) const {
  switch (method_) {
    case SingleMethod::GrayWorld: return gray_world(record, config_, columns);
    case SingleMethod::MaxRgb: return max_rgb(record, config_, columns);
    case SingleMethod::ShadesOfGray: return shades_of_gray(record, config_, columns);
    case SingleMethod::GrayEdge: return gray_edge(record, config_, columns);
    case SingleMethod::Constant: return constant_.raw();
  }
  return constant_.raw();
}

std::vector<RawEstimate> Estimator::estimate(const SceneRecord& record) const {
  if (arity_ == 1) return {estimate_single(record)};
  const std::size_t mid = record.raster.width / 2;
  if (mode_ == TwoIlluminantMode::Duplicate) {
    const RawEstimate e = estimate_single(record);
    return {e, e};
  }
  return {estimate_single(record, {0, mid}), estimate_single(record, {mid, record.raster.width})};
}

std::pair<RawEstimate, RawEstimate> two_illuminant_baseline(const SceneRecord& record, const Estimator& inner,
                                                            TwoIlluminantMode mode) {
  if (inner.arity() != 1) {
    throw Error(ErrorCode::ArityMismatch, "two-illuminant baseline needs a single-illuminant estimator");
  }
  if (mode == TwoIlluminantMode::Duplicate) {
    const RawEstimate e = inner.estimate_single(record);
    return {e, e};
  }
  const std::size_t mid = record.raster.width / 2;
  return {inner.estimate_single(record, {0, mid}), inner.estimate_single(record, {mid, record.raster.width})};
}

std::vector<std::string_view> estimator_names() {
  return {"gray_world", "max_rgb", "shades_of_gray", "gray_edge", "constant", "split_gray_world", "dup_gray_world"};
}

}  // namespace ccbench
