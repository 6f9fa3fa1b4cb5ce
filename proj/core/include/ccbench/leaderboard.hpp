#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccbench/dataset.hpp"
#include "ccbench/stats.hpp"
#include "ccbench/submission.hpp"

namespace ccbench {

enum class RankBy { Worst25, Mean, Median, MeanSquared, Worst5, Worst1 };

std::string_view to_string(RankBy metric);
/// Accepts worst25, mean, median, mean-squared, worst5, worst1.
RankBy parse_rank_by(std::string_view name);

/// General ranks by the worst-25% mean, Indoor by the mean, TwoIlluminant by
/// the mean of squared per-image values.
RankBy default_rank_by(TrackId track);

double metric_value(const ErrorSummary& summary, RankBy metric);

struct PerImageError {
  std::string image_id;
  /// Degrees. For two-illuminant tracks, the root of the squared sum.
  double error = 0.0;
  /// error^2: R^2 for single-illuminant tracks, the squared sum otherwise.
  double squared = 0.0;
};

struct LeaderboardRow {
  std::string team;
  std::string algorithm;
  double ranking_metric = 0.0;
  ErrorSummary summary;
  std::vector<PerImageError> per_image;
};

struct Leaderboard {
  TrackId track = TrackId::General;
  RankBy rank_by = RankBy::Worst25;
  std::vector<LeaderboardRow> rows;
};

/// Per-image errors for a submission that already passed check_coverage(),
/// in track order. Estimates are normalized first, so non-positive
/// components raise NonPositiveComponent.
std::vector<PerImageError> score_submission(const Submission& submission, const TrackInstance& track,
                                            unsigned threads = 1);

LeaderboardRow make_row(std::string team, std::string algorithm, std::vector<PerImageError> per_image);

/// Sets each row's ranking_metric from its summary and sorts ascending,
/// ties broken by (team, algorithm).
void rank_rows(std::vector<LeaderboardRow>& rows, RankBy metric);

/// Validates every submission's coverage before scoring any of them.
Leaderboard evaluate_submissions(const std::vector<Submission>& submissions, const TrackInstance& track,
                                 std::optional<RankBy> rank_by = std::nullopt, unsigned threads = 1);

void write_json(std::ostream& out, const Leaderboard& board);
void write_csv(std::ostream& out, const Leaderboard& board);
void write_text(std::ostream& out, const Leaderboard& board);
/// image_id,error,squared for one row.
void write_per_image_csv(std::ostream& out, const LeaderboardRow& row);

/// Parses the JSON written by write_json(). Throws MalformedInput.
Leaderboard read_leaderboard_json(std::istream& in);

}  // namespace ccbench
