#include "ccbench/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ccbench/error.hpp"

namespace ccbench {
namespace {

std::vector<double> sorted_copy(std::span<const double> errors) {
  if (errors.empty()) {
    throw Error(ErrorCode::EmptySample, "no samples to summarize");
  }
  std::vector<double> v(errors.begin(), errors.end());
  for (double e : v) {
    if (!std::isfinite(e) || e < 0.0) {
      throw Error(ErrorCode::MalformedInput, "error samples must be finite and non-negative");
    }
  }
  std::sort(v.begin(), v.end());
  return v;
}

double sorted_quantile(const std::vector<double>& v, double p) {
  const double pos = p * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  const double t = pos - static_cast<double>(lo);
  return v[lo] + t * (v[hi] - v[lo]);
}

double sorted_median(const std::vector<double>& v) {
  const std::size_t n = v.size();
  if (n % 2 == 1) return v[n / 2];
  return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double sorted_trimean(const std::vector<double>& v) {
  return (sorted_quantile(v, 0.25) + 2.0 * sorted_median(v) + sorted_quantile(v, 0.75)) / 4.0;
}

double sorted_worst_mean(const std::vector<double>& v, double fraction) {
  const std::size_t k = worst_k_count(v.size(), fraction);
  const double tail = std::accumulate(v.end() - static_cast<std::ptrdiff_t>(k), v.end(), 0.0);
  return tail / static_cast<double>(k);
}

double sorted_mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

std::size_t worst_k_count(std::size_t n, double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw Error(ErrorCode::InvalidFraction, "fraction must lie in (0, 1]");
  }
  // The slack keeps products like 0.01 * 300 = 3.0000000000000004 at 3.
  const double raw = std::ceil(fraction * static_cast<double>(n) - 1e-9);
  return std::clamp<std::size_t>(static_cast<std::size_t>(std::max(raw, 1.0)), 1, n);
}

ErrorSummary summarize(std::span<const double> errors) {
  const std::vector<double> v = sorted_copy(errors);
  ErrorSummary s;
  s.n = v.size();
  s.mean = sorted_mean(v);
  s.median = sorted_median(v);
  s.trimean = sorted_trimean(v);
  s.worst25_mean = sorted_worst_mean(v, 0.25);
  s.worst5_mean = sorted_worst_mean(v, 0.05);
  s.worst1_mean = sorted_worst_mean(v, 0.01);
  s.worst = v.back();
  s.mean_squared = std::accumulate(v.begin(), v.end(), 0.0,
                                   [](double acc, double e) { return acc + e * e; }) /
                   static_cast<double>(v.size());
  return s;
}

ErrorSummary summarize(std::span<const ErrorSample> samples) {
  std::vector<double> errors;
  errors.reserve(samples.size());
  for (const auto& s : samples) errors.push_back(s.error);
  return summarize(errors);
}

double mean(std::span<const double> errors) { return sorted_mean(sorted_copy(errors)); }

double median(std::span<const double> errors) { return sorted_median(sorted_copy(errors)); }

double quantile(std::span<const double> errors, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::InvalidFraction, "quantile position must lie in [0, 1]");
  }
  return sorted_quantile(sorted_copy(errors), p);
}

double trimean(std::span<const double> errors) { return sorted_trimean(sorted_copy(errors)); }

double worst_k_mean(std::span<const double> errors, double fraction) {
  worst_k_count(1, fraction);
  return sorted_worst_mean(sorted_copy(errors), fraction);
}

}  // namespace ccbench
