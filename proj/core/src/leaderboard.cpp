#include "ccbench/leaderboard.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <tuple>

#include <fmt/format.h>
#include <json.hpp>

#include "ccbench/error.hpp"
#include "ccbench/parallel.hpp"

namespace ccbench {
using json = nlohmann::json;

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

json summary_json(const ErrorSummary& s) {
  return {{"n", s.n},
          {"mean", s.mean},
          {"median", s.median},
          {"trimean", s.trimean},
          {"worst25_mean", s.worst25_mean},
          {"worst5_mean", s.worst5_mean},
          {"worst1_mean", s.worst1_mean},
          {"worst", s.worst},
          {"mean_squared", s.mean_squared}};
}

ErrorSummary summary_from_json(const json& j) {
  ErrorSummary s;
  s.n = j.at("n").get<std::size_t>();
  s.mean = j.at("mean").get<double>();
  s.median = j.at("median").get<double>();
  s.trimean = j.at("trimean").get<double>();
  s.worst25_mean = j.at("worst25_mean").get<double>();
  s.worst5_mean = j.at("worst5_mean").get<double>();
  s.worst1_mean = j.at("worst1_mean").get<double>();
  s.worst = j.at("worst").get<double>();
  s.mean_squared = j.at("mean_squared").get<double>();
  return s;
}

}  // namespace

std::string_view to_string(RankBy metric) {
  switch (metric) {
    case RankBy::Worst25: return "worst25";
    case RankBy::Mean: return "mean";
    case RankBy::Median: return "median";
    case RankBy::MeanSquared: return "mean-squared";
    case RankBy::Worst5: return "worst5";
    case RankBy::Worst1: return "worst1";
  }
  return "worst25";
}

RankBy parse_rank_by(std::string_view name) {
  for (RankBy m : {RankBy::Worst25, RankBy::Mean, RankBy::Median, RankBy::MeanSquared, RankBy::Worst5,
                   RankBy::Worst1}) {
    if (name == to_string(m)) return m;
  }
  throw Error(ErrorCode::InvalidConfig, "unknown ranking metric \"" + std::string(name) + "\"");
}

RankBy default_rank_by(TrackId track) {
  switch (track) {
    case TrackId::General: return RankBy::Worst25;
    case TrackId::Indoor: return RankBy::Mean;
    case TrackId::TwoIlluminant: return RankBy::MeanSquared;
  }
  return RankBy::Worst25;
}

double metric_value(const ErrorSummary& s, RankBy metric) {
  switch (metric) {
    case RankBy::Worst25: return s.worst25_mean;
    case RankBy::Mean: return s.mean;
    case RankBy::Median: return s.median;
    case RankBy::MeanSquared: return s.mean_squared;
    case RankBy::Worst5: return s.worst5_mean;
    case RankBy::Worst1: return s.worst1_mean;
  }
  return s.worst25_mean;
}

std::vector<PerImageError> score_submission(const Submission& submission, const TrackInstance& track,
                                            unsigned threads) {
  std::map<std::string, const SubmissionRow*> by_id;
  for (const auto& row : submission.rows) by_id.emplace(row.image_id, &row);

  return parallel_map(track.entries.size(), threads, [&](std::size_t i) {
    const TrackEntry& entry = track.entries[i];
    const SubmissionRow& row = *by_id.at(entry.id);
    PerImageError out{entry.id, 0.0, 0.0};
    try {
      if (entry.secondary) {
        const double e = two_illuminant_error(entry.primary, *entry.secondary, normalize(row.estimates.at(0)),
                                              normalize(row.estimates.at(1)));
        out.squared = e;
        out.error = std::sqrt(e);
      } else {
        out.error = reproduction_error(entry.primary, normalize(row.estimates.at(0))).value;
        out.squared = out.error * out.error;
      }
    } catch (const Error& e) {
      throw Error(e.code(), fmt::format("{} / {}: image {}: {}", submission.team, submission.algorithm, entry.id,
                                        e.what()));
    }
    return out;
  });
}

LeaderboardRow make_row(std::string team, std::string algorithm, std::vector<PerImageError> per_image) {
  std::vector<double> errors;
  errors.reserve(per_image.size());
  for (const auto& p : per_image) errors.push_back(p.error);
  LeaderboardRow row{std::move(team), std::move(algorithm), 0.0, summarize(errors), std::move(per_image)};
  return row;
}

void rank_rows(std::vector<LeaderboardRow>& rows, RankBy metric) {
  for (auto& row : rows) row.ranking_metric = metric_value(row.summary, metric);
  std::stable_sort(rows.begin(), rows.end(), [](const LeaderboardRow& a, const LeaderboardRow& b) {
    return std::tie(a.ranking_metric, a.team, a.algorithm) < std::tie(b.ranking_metric, b.team, b.algorithm);
  });
}

Leaderboard evaluate_submissions(const std::vector<Submission>& submissions, const TrackInstance& track,
                                 std::optional<RankBy> rank_by, unsigned threads) {
  for (const auto& s : submissions) check_coverage(s, track);

  Leaderboard board{track.track, rank_by.value_or(default_rank_by(track.track)), {}};
  for (const auto& s : submissions) {
    board.rows.push_back(make_row(s.team, s.algorithm, score_submission(s, track, threads)));
  }
  rank_rows(board.rows, board.rank_by);
  return board;
}

void write_json(std::ostream& out, const Leaderboard& board) {
  json rows = json::array();
  for (std::size_t i = 0; i < board.rows.size(); ++i) {
    const auto& row = board.rows[i];
    json per_image = json::array();
    for (const auto& p : row.per_image) {
      per_image.push_back({{"image_id", p.image_id}, {"error", p.error}, {"squared", p.squared}});
    }
    rows.push_back({{"rank", i + 1},
                    {"team", row.team},
                    {"algorithm", row.algorithm},
                    {"ranking_metric", row.ranking_metric},
                    {"summary", summary_json(row.summary)},
                    {"per_image", per_image}});
  }
  const json doc = {{"track", to_string(board.track)}, {"rank_by", to_string(board.rank_by)}, {"rows", rows}};
  out << doc.dump(2) << '\n';
}

void write_csv(std::ostream& out, const Leaderboard& board) {
  out << "rank,team,algorithm,ranking_metric,mean,median,trimean,worst25_mean,worst5_mean,worst1_mean,worst,"
         "mean_squared,n\n";
  for (std::size_t i = 0; i < board.rows.size(); ++i) {
    const auto& r = board.rows[i];
    const auto& s = r.summary;
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", i + 1, csv_field(r.team), csv_field(r.algorithm),
                       r.ranking_metric, s.mean, s.median, s.trimean, s.worst25_mean, s.worst5_mean, s.worst1_mean,
                       s.worst, s.mean_squared, s.n);
  }
}

void write_text(std::ostream& out, const Leaderboard& board) {
  std::size_t team_w = 4;
  std::size_t algo_w = 9;
  for (const auto& r : board.rows) {
    team_w = std::max(team_w, r.team.size());
    algo_w = std::max(algo_w, r.algorithm.size());
  }
  out << fmt::format("track: {}  ranked by: {}\n", to_string(board.track), to_string(board.rank_by));
  out << fmt::format("{:>4}  {:<{}}  {:<{}}  {:>12}  {:>9}  {:>9}  {:>9}  {:>9}  {:>9}  {:>9}  {:>9}  {:>12}  {:>6}\n",
                     "rank", "team", team_w, "algorithm", algo_w, "metric", "mean", "median", "trimean", "worst25",
                     "worst5", "worst1", "worst", "mean_sq", "n");
  for (std::size_t i = 0; i < board.rows.size(); ++i) {
    const auto& r = board.rows[i];
    const auto& s = r.summary;
    out << fmt::format(
        "{:>4}  {:<{}}  {:<{}}  {:>12.6f}  {:>9.3f}  {:>9.3f}  {:>9.3f}  {:>9.3f}  {:>9.3f}  {:>9.3f}  {:>9.3f}  "
        "{:>12.6f}  {:>6}\n",
        i + 1, r.team, team_w, r.algorithm, algo_w, r.ranking_metric, s.mean, s.median, s.trimean, s.worst25_mean,
        s.worst5_mean, s.worst1_mean, s.worst, s.mean_squared, s.n);
  }
}

void write_per_image_csv(std::ostream& out, const LeaderboardRow& row) {
  out << "image_id,error,squared\n";
  for (const auto& p : row.per_image) out << fmt::format("{},{},{}\n", p.image_id, p.error, p.squared);
}

Leaderboard read_leaderboard_json(std::istream& in) {
  try {
    const json doc = json::parse(in);
    Leaderboard board;
    board.track = parse_track(doc.at("track").get<std::string>());
    board.rank_by = parse_rank_by(doc.at("rank_by").get<std::string>());
    for (const json& r : doc.at("rows")) {
      LeaderboardRow row;
      row.team = r.at("team").get<std::string>();
      row.algorithm = r.at("algorithm").get<std::string>();
      row.ranking_metric = r.at("ranking_metric").get<double>();
      row.summary = summary_from_json(r.at("summary"));
      if (r.contains("per_image")) {
        for (const json& p : r.at("per_image")) {
          row.per_image.push_back(
              {p.at("image_id").get<std::string>(), p.at("error").get<double>(), p.at("squared").get<double>()});
        }
      }
      board.rows.push_back(std::move(row));
    }
    return board;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("leaderboard JSON: ") + e.what());
  } catch (const Error& e) {
    throw Error(ErrorCode::MalformedInput, std::string("leaderboard JSON: ") + e.what());
  }
}

}  // namespace ccbench
