#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccbench/color.hpp"
#include "ccbench/dataset.hpp"

namespace ccbench {

struct EstimatorConfig {
  double minkowski_p = 6.0;
  double derivative_sigma = 2.0;
  double saturation_fraction = 0.95;
  /// 0 disables regularization; see normalize_with_floor().
  double epsilon_floor = 0.0;

  /// Throws InvalidConfig when a field is out of range.
  void validate() const;
};

/// Half-open column range [begin, end) an estimator looks at.
struct ColumnRange {
  std::size_t begin = 0;
  std::size_t end = static_cast<std::size_t>(-1);
};

// Statistics-based single-illuminant estimators. All run on black-level
// subtracted data restricted to usable pixels and return an unnormalized
// estimate with strictly positive components. They throw EmptyUsableRegion
// when nothing usable is left in the range.

/// Per-channel mean.
RawEstimate gray_world(const SceneRecord& record, const EstimatorConfig& config = {},
                       ColumnRange columns = {});

/// Per-channel maximum.
RawEstimate max_rgb(const SceneRecord& record, const EstimatorConfig& config = {},
                    ColumnRange columns = {});

/// Per-channel Minkowski p-mean, (mean x^p)^(1/p).
RawEstimate shades_of_gray(const SceneRecord& record, const EstimatorConfig& config = {},
                           ColumnRange columns = {});

/// Minkowski p-mean of per-channel gradient magnitudes after Gaussian
/// smoothing with derivative_sigma. Masked pixels take no part in the blur
/// or the difference stencils. Throws DegenerateGradient when a channel has
/// no gradient energy.
RawEstimate gray_edge(const SceneRecord& record, const EstimatorConfig& config = {},
                      ColumnRange columns = {});

/// Normalized component-wise mean of training ground truths. Throws
/// EmptySample.
Chromaticity constant_baseline(std::span<const Chromaticity> training);

enum class SingleMethod { GrayWorld, MaxRgb, ShadesOfGray, GrayEdge, Constant };

enum class TwoIlluminantMode {
  /// Run the inner estimator on each half of the image, split at the
  /// horizontal midpoint.
  Split,
  /// Run it on the whole image and report the same answer twice.
  Duplicate,
};

/// A configured estimator as selected by name on the command line.
class Estimator {
 public:
  /// Known names: gray_world, max_rgb, shades_of_gray, gray_edge, constant,
  /// split_gray_world, dup_gray_world. Throws UnknownEstimator.
  static Estimator from_name(std::string_view name, const EstimatorConfig& config = {});

  /// Wraps an arity-1 estimator to report its answer twice.
  Estimator duplicated() const;

  const std::string& name() const noexcept { return name_; }
  int arity() const noexcept { return arity_; }
  const EstimatorConfig& config() const noexcept { return config_; }
  bool needs_training() const noexcept { return method_ == SingleMethod::Constant; }

  /// Sets the vector used by the constant method.
  void set_constant(const Chromaticity& c) { constant_ = c; }

  /// One estimate per illuminant (arity() entries).
  std::vector<RawEstimate> estimate(const SceneRecord& record) const;

  /// The inner single-illuminant estimate over a column range.
  RawEstimate estimate_single(const SceneRecord& record, ColumnRange columns = {}) const;

 private:
  Estimator(std::string name, SingleMethod method, int arity, TwoIlluminantMode mode,
            EstimatorConfig config)
      : name_(std::move(name)), method_(method), arity_(arity), mode_(mode), config_(config) {}

  std::string name_;
  SingleMethod method_;
  int arity_;
  TwoIlluminantMode mode_;
  EstimatorConfig config_;
  Chromaticity constant_ = Chromaticity::white();
};

/// Runs inner (arity 1) on both image halves or duplicates its whole-image
/// answer. Throws ArityMismatch if inner is not arity 1.
std::pair<RawEstimate, RawEstimate> two_illuminant_baseline(const SceneRecord& record,
                                                            const Estimator& inner,
                                                            TwoIlluminantMode mode = TwoIlluminantMode::Split);

std::vector<std::string_view> estimator_names();

}  // namespace ccbench
