#pragma once

#include <array>
#include <compare>

namespace ccbench {

/// Unnormalized RGB triple as produced by an estimator or read from a file.
struct RawEstimate {
  double r = 0.0;
  double g = 0.0;
  double b = 0.0;

  friend bool operator==(const RawEstimate&, const RawEstimate&) = default;
};

/// Illuminant direction: strictly positive, unit Euclidean norm.
///
/// Instances can only be obtained through normalize(), so every live value
/// satisfies the invariants.
class Chromaticity {
 public:
  double r() const noexcept { return rgb_[0]; }
  double g() const noexcept { return rgb_[1]; }
  double b() const noexcept { return rgb_[2]; }
  const std::array<double, 3>& rgb() const noexcept { return rgb_; }

  RawEstimate raw() const noexcept { return {rgb_[0], rgb_[1], rgb_[2]}; }

  /// (1,1,1)/sqrt(3), the perfectly corrected white.
  static Chromaticity white() noexcept;

  friend bool operator==(const Chromaticity&, const Chromaticity&) = default;

 private:
  explicit Chromaticity(std::array<double, 3> rgb) noexcept : rgb_(rgb) {}
  std::array<double, 3> rgb_;

  friend Chromaticity normalize(const RawEstimate& v);
};

/// Angle in degrees.
struct AngleDeg {
  double value = 0.0;

  friend auto operator<=>(const AngleDeg&, const AngleDeg&) = default;
};

/// Throws ZeroVector when all components are zero and NonPositiveComponent
/// when any component is not strictly positive (or not finite).
Chromaticity normalize(const RawEstimate& v);

/// Opt-in regularization for algorithm outputs: components below
/// floor_fraction * max(component) are raised to that floor before
/// normalizing. Negative or non-finite input is still rejected.
Chromaticity normalize_with_floor(const RawEstimate& v, double floor_fraction = 1e-6);

/// Reproduction angular error: angle between white and gt / est (element-wise),
/// i.e. the residual cast left after correcting gt with est.
AngleDeg reproduction_error(const Chromaticity& gt, const Chromaticity& est);

/// Recovery angular error: plain angle between the two vectors.
AngleDeg recovery_error(const Chromaticity& gt, const Chromaticity& est);

/// Two-illuminant error in squared degrees: the cheaper of the two ways to
/// pair estimates with ground truths, each pairing scored as R^2 + R^2.
double two_illuminant_error(const Chromaticity& gt1, const Chromaticity& gt2,
                            const Chromaticity& est1, const Chromaticity& est2);

/// Upper bound of reproduction_error over strictly positive inputs,
/// arccos(1/sqrt(3)) in degrees. Never attained.
inline constexpr double kReproductionErrorSupremumDeg = 54.735610317245346;

}  // namespace ccbench
