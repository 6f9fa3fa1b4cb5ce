#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ccbench {

struct ErrorSample {
  std::string image_id;
  double error = 0.0;
};

/// Aggregate statistics over per-image errors, all in the samples' unit.
struct ErrorSummary {
  double mean = 0.0;
  double median = 0.0;
  double trimean = 0.0;
  double worst25_mean = 0.0;
  double worst5_mean = 0.0;
  double worst1_mean = 0.0;
  double worst = 0.0;
  double mean_squared = 0.0;
  std::size_t n = 0;

  friend bool operator==(const ErrorSummary&, const ErrorSummary&) = default;
};

// All functions throw EmptySample on empty input and MalformedInput on
// negative or non-finite values.

ErrorSummary summarize(std::span<const double> errors);
ErrorSummary summarize(std::span<const ErrorSample> samples);

double mean(std::span<const double> errors);
double median(std::span<const double> errors);

/// Quantile with linear interpolation at zero-based position p * (n - 1).
double quantile(std::span<const double> errors, double p);

/// (Q1 + 2 * Q2 + Q3) / 4 with quartiles from quantile().
double trimean(std::span<const double> errors);

/// Mean of the ceil(fraction * n) largest values. Throws InvalidFraction
/// unless 0 < fraction <= 1.
double worst_k_mean(std::span<const double> errors, double fraction);

/// Number of samples in the worst-fraction tail, at least 1.
std::size_t worst_k_count(std::size_t n, double fraction);

}  // namespace ccbench
