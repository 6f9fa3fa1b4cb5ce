#include "ccbench/color.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ccbench/error.hpp"

namespace ccbench {
namespace {

using Vec3 = std::array<double, 3>;

// atan2(|u x v|, u . v) stays accurate near 0 where acos of a clamped cosine
// loses about 1e-8 rad to rounding.
double angle_between_deg(const Vec3& u, const Vec3& v) {
  const double cx = u[1] * v[2] - u[2] * v[1];
  const double cy = u[2] * v[0] - u[0] * v[2];
  const double cz = u[0] * v[1] - u[1] * v[0];
  const double dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  return std::atan2(std::hypot(cx, cy, cz), dot) * (180.0 / std::numbers::pi);
}

void reject_invalid(const RawEstimate& v) {
  for (double c : {v.r, v.g, v.b}) {
    if (!std::isfinite(c) || c < 0.0) {
      throw Error(ErrorCode::NonPositiveComponent, "estimate has a negative or non-finite component");
    }
  }
  if (v.r == 0.0 && v.g == 0.0 && v.b == 0.0) {
    throw Error(ErrorCode::ZeroVector, "estimate is the zero vector");
  }
}

}  // namespace

Chromaticity Chromaticity::white() noexcept {
  const double c = 1.0 / std::numbers::sqrt3;
  return Chromaticity({c, c, c});
}

Chromaticity normalize(const RawEstimate& v) {
  reject_invalid(v);
  if (v.r <= 0.0 || v.g <= 0.0 || v.b <= 0.0) {
    throw Error(ErrorCode::NonPositiveComponent, "estimate has a zero component");
  }
  const double norm = std::hypot(v.r, v.g, v.b);
  // Already-unit input is kept bit-exact so chromaticities survive text
  // round trips unchanged.
  if (std::abs(norm - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon()) {
    return Chromaticity({v.r, v.g, v.b});
  }
  return Chromaticity({v.r / norm, v.g / norm, v.b / norm});
}

Chromaticity normalize_with_floor(const RawEstimate& v, double floor_fraction) {
  reject_invalid(v);
  const double floor = floor_fraction * std::max({v.r, v.g, v.b});
  return normalize({std::max(v.r, floor), std::max(v.g, floor), std::max(v.b, floor)});
}

AngleDeg reproduction_error(const Chromaticity& gt, const Chromaticity& est) {
  const Vec3 quotient{gt.r() / est.r(), gt.g() / est.g(), gt.b() / est.b()};
  return {angle_between_deg({1.0, 1.0, 1.0}, quotient)};
}

AngleDeg recovery_error(const Chromaticity& gt, const Chromaticity& est) {
  return {angle_between_deg(gt.rgb(), est.rgb())};
}

double two_illuminant_error(const Chromaticity& gt1, const Chromaticity& gt2,
                            const Chromaticity& est1, const Chromaticity& est2) {
  const auto sq = [](const Chromaticity& g, const Chromaticity& a) {
    const double r = reproduction_error(g, a).value;
    return r * r;
  };
  return std::min(sq(gt1, est1) + sq(gt2, est2), sq(gt1, est2) + sq(gt2, est1));
}

}  // namespace ccbench
