#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ccbench/dataset.hpp"
#include "ccbench/error.hpp"
#include "ccbench/estimators.hpp"
#include "ccbench/leaderboard.hpp"
#include "ccbench/parallel.hpp"
#include "ccbench/submission.hpp"

namespace ccbench::cli {
namespace fs = std::filesystem;

namespace {

struct GlobalOptions {
  std::string dataset;
  std::string track = "general";
  std::optional<std::string> rank_by;
  unsigned threads = 1;
  std::optional<int> black_level;
  double saturation_fraction = 0.95;
  std::string format = "text";
  std::string face_metric = "recovery";
  double threshold = 2.0;
};

struct SplitCommand {
  std::string out_dir;
};

struct RunCommand {
  std::string estimator;
  bool duplicate = false;
  double p = 6.0;
  double sigma = 2.0;
  double epsilon_floor = 0.0;
  std::string train_dataset;
  std::string out;
};

struct EvaluateCommand {
  std::vector<std::string> submissions;
  std::vector<std::string> names;
  std::string output;
};

struct ReportCommand {
  std::string leaderboard;
  std::string per_image_dir;
  std::string output;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownEstimator:
    case ErrorCode::InvalidConfig:
    case ErrorCode::InvalidFraction:
      return kUsageError;
    case ErrorCode::ArityMismatch:
    case ErrorCode::MissingImageId:
    case ErrorCode::ExtraImageId:
    case ErrorCode::NonPositiveComponent:
    case ErrorCode::ZeroVector:
      return kValidationError;
    default:
      return kDataError;
  }
}

SplitOptions split_options(const GlobalOptions& g) {
  return {g.threshold, g.face_metric == "reproduction" ? FaceMetric::Reproduction : FaceMetric::Recovery};
}

LoadedDataset<SceneAnnotation> load_dataset(const std::string& dir, std::ostream& err) {
  if (dir.empty()) throw Error(ErrorCode::InvalidConfig, "--dataset is required");
  auto loaded = load_annotations(dir);
  for (const auto& s : loaded.skipped) err << "warning: skipping " << s.id << ": " << s.reason << '\n';
  return loaded;
}

// Writes to `path`, or to `out` when path is empty or "-".
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn&& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::IoError, "cannot write " + path);
  write(file);
  if (!file) throw Error(ErrorCode::IoError, "cannot write " + path);
}

void emit_leaderboard(const Leaderboard& board, const std::string& format, const std::string& path,
                      std::ostream& out) {
  emit(path, out, [&](std::ostream& o) {
    if (format == "json") {
      write_json(o, board);
    } else if (format == "csv") {
      write_csv(o, board);
    } else {
      write_text(o, board);
    }
  });
}

int cmd_split(const GlobalOptions& g, const SplitCommand& cmd, std::ostream& out, std::ostream& err) {
  const auto loaded = load_dataset(g.dataset, err);
  const auto tracks = split_tracks(loaded.items, split_options(g));
  fs::create_directories(cmd.out_dir);
  for (const auto& [id, instance] : tracks) {
    const fs::path path = fs::path(cmd.out_dir) / (std::string(to_string(id)) + ".csv");
    emit(path.string(), out, [&](std::ostream& o) {
      o << "image_id,arity\n";
      for (const auto& e : instance.entries) o << e.id << ',' << track_arity(id) << '\n';
    });
    out << fmt::format("{}: {} images\n", to_string(id), instance.entries.size());
  }
  return kSuccess;
}

Chromaticity training_constant(const std::vector<SceneAnnotation>& training, TrackId track, const GlobalOptions& g) {
  const auto tracks = split_tracks(training, split_options(g));
  std::vector<Chromaticity> gts;
  for (const auto& e : tracks.at(track).entries) {
    gts.push_back(e.primary);
    if (e.secondary) gts.push_back(*e.secondary);
  }
  if (gts.empty()) {
    for (const auto& a : training) gts.push_back(single_ground_truth(a));
  }
  return constant_baseline(gts);
}

int cmd_run(const GlobalOptions& g, const RunCommand& cmd, std::ostream& out, std::ostream& err) {
  const TrackId track = parse_track(g.track);
  EstimatorConfig config;
  config.minkowski_p = cmd.p;
  config.derivative_sigma = cmd.sigma;
  config.saturation_fraction = g.saturation_fraction;
  config.epsilon_floor = cmd.epsilon_floor;

  Estimator estimator = Estimator::from_name(cmd.estimator, config);
  if (estimator.arity() != track_arity(track)) {
    if (estimator.arity() == 1 && cmd.duplicate) {
      estimator = estimator.duplicated();
    } else {
      throw Error(ErrorCode::ArityMismatch,
                  fmt::format("estimator {} reports {} illuminant(s), track {} needs {}{}", estimator.name(),
                              estimator.arity(), to_string(track), track_arity(track),
                              estimator.arity() == 1 ? " (use --duplicate)" : ""));
    }
  }

  const auto loaded = load_dataset(g.dataset, err);
  const auto tracks = split_tracks(loaded.items, split_options(g));
  const TrackInstance& instance = tracks.at(track);

  const auto training = cmd.train_dataset.empty() ? loaded : load_dataset(cmd.train_dataset, err);
  const Chromaticity constant = training_constant(training.items, track, g);
  estimator.set_constant(constant);

  LoadOptions load;
  load.black_level_override = g.black_level;

  struct Outcome {
    SubmissionRow row;
    std::string failure;
  };
  const auto outcomes = parallel_map(instance.entries.size(), g.threads, [&](std::size_t i) {
    const std::string& id = instance.entries[i].id;
    const SceneRecord record = load_record(g.dataset, id, load);
    try {
      return Outcome{{id, estimator.estimate(record)}, {}};
    } catch (const Error& e) {
      switch (e.code()) {
        case ErrorCode::EmptyUsableRegion:
        case ErrorCode::DegenerateGradient:
        case ErrorCode::NonPositiveComponent:
        case ErrorCode::ZeroVector:
          return Outcome{{id, std::vector<RawEstimate>(static_cast<std::size_t>(estimator.arity()), constant.raw())},
                         e.what()};
        default:
          throw;
      }
    }
  });

  Submission submission;
  submission.track = track;
  std::size_t fallbacks = 0;
  for (const auto& o : outcomes) {
    if (!o.failure.empty()) {
      ++fallbacks;
      err << "warning: " << o.row.image_id << ": " << o.failure << "; using constant fallback\n";
    }
    submission.rows.push_back(o.row);
  }
  if (cmd.out.empty() || cmd.out == "-") {
    write_submission_csv(out, submission);
  } else {
    write_submission_csv(fs::path(cmd.out), submission);
  }
  err << fmt::format("run: {} on {} track, {} images, {} fallback(s)\n", estimator.name(), to_string(track),
                     submission.rows.size(), fallbacks);
  return kSuccess;
}

std::pair<std::string, std::string> submission_name(const std::string& path, std::size_t index,
                                                    const std::vector<std::string>& names) {
  if (index < names.size()) {
    const std::string& n = names[index];
    const auto colon = n.find(':');
    if (colon == std::string::npos) return {n, n};
    return {n.substr(0, colon), n.substr(colon + 1)};
  }
  const std::string stem = fs::path(path).stem().string();
  const auto sep = stem.find("__");
  if (sep == std::string::npos) return {stem, stem};
  return {stem.substr(0, sep), stem.substr(sep + 2)};
}

int cmd_evaluate(const GlobalOptions& g, const EvaluateCommand& cmd, std::ostream& out, std::ostream& err) {
  const TrackId track = parse_track(g.track);
  std::optional<RankBy> rank_by;
  if (g.rank_by) rank_by = parse_rank_by(*g.rank_by);

  const auto loaded = load_dataset(g.dataset, err);
  const auto tracks = split_tracks(loaded.items, split_options(g));

  std::vector<Submission> submissions;
  for (std::size_t i = 0; i < cmd.submissions.size(); ++i) {
    Submission s = read_submission_csv(cmd.submissions[i], track);
    std::tie(s.team, s.algorithm) = submission_name(cmd.submissions[i], i, cmd.names);
    submissions.push_back(std::move(s));
  }
  const Leaderboard board = evaluate_submissions(submissions, tracks.at(track), rank_by, g.threads);
  emit_leaderboard(board, g.format, cmd.output, out);
  return kSuccess;
}

std::string sanitize(const std::string& s) {
  std::string r = s;
  for (char& c : r) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '.') c = '_';
  }
  return r;
}

int cmd_report(const GlobalOptions& g, const ReportCommand& cmd, std::ostream& out, std::ostream&) {
  std::ifstream in(cmd.leaderboard, std::ios::binary);
  if (!in) throw Error(ErrorCode::MissingFile, "cannot open " + cmd.leaderboard);
  const Leaderboard board = read_leaderboard_json(in);
  emit_leaderboard(board, g.format, cmd.output, out);

  if (!cmd.per_image_dir.empty()) {
    fs::create_directories(cmd.per_image_dir);
    for (std::size_t i = 0; i < board.rows.size(); ++i) {
      const auto& row = board.rows[i];
      const fs::path path = fs::path(cmd.per_image_dir) /
                            fmt::format("{:03}_{}_{}.csv", i + 1, sanitize(row.team), sanitize(row.algorithm));
      emit(path.string(), out, [&](std::ostream& o) { write_per_image_csv(o, row); });
    }
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Colour constancy benchmark: track splits, baseline estimators and leaderboards", "ccbench"};
  app.set_config("--config", "", "Flat key = value configuration file (command-line flags take precedence)");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--dataset", g.dataset, "Dataset directory with <id>.png / <id>.json pairs");
  app.add_option("--track", g.track, "Track to run or score")->check(CLI::IsMember({"general", "indoor", "two"}));
  app.add_option("--rank-by", g.rank_by, "Override the track's ranking metric")
      ->check(CLI::IsMember({"worst25", "mean", "median", "mean-squared", "worst5", "worst1"}));
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--black-level", g.black_level, "Black level in counts; overrides the sidecar value")
      ->check(CLI::Range(0, 65535));
  app.add_option("--saturation-fraction", g.saturation_fraction,
                 "Pixels at or above this fraction of the saturation level are ignored")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("--face-metric", g.face_metric, "Angle used for the two-face split")
      ->check(CLI::IsMember({"recovery", "reproduction"}));
  app.add_option("--threshold", g.threshold, "Face angle (degrees) separating single and two-illuminant scenes")
      ->check(CLI::PositiveNumber);

  SplitCommand split;
  auto* split_cmd = app.add_subcommand("split", "Write per-track image manifests");
  split_cmd->add_option("--out", split.out_dir, "Output directory")->required();

  RunCommand run_opts;
  auto* run_cmd = app.add_subcommand("run", "Run a baseline estimator and write a submission CSV");
  run_cmd->add_option("--estimator", run_opts.estimator, "Estimator name")->required();
  run_cmd->add_flag("--duplicate", run_opts.duplicate, "Report a single-illuminant estimate twice");
  run_cmd->add_option("--p", run_opts.p, "Minkowski norm for shades_of_gray / gray_edge");
  run_cmd->add_option("--sigma", run_opts.sigma, "Gaussian sigma (pixels) for gray_edge");
  run_cmd->add_option("--epsilon-floor", run_opts.epsilon_floor, "Raise tiny channels to this fraction of the max");
  run_cmd->add_option("--train-dataset", run_opts.train_dataset, "Ground truths for the constant estimator");
  run_cmd->add_option("--out", run_opts.out, "Submission CSV path ('-' for stdout)")->required();

  EvaluateCommand eval;
  auto* eval_cmd = app.add_subcommand("evaluate", "Score submissions and print a leaderboard");
  eval_cmd->add_option("submissions", eval.submissions, "Submission CSV files")->required();
  eval_cmd->add_option("--name", eval.names, "TEAM:ALGORITHM for each submission, in order");
  eval_cmd->add_option("--output", eval.output, "Output file (default stdout)");

  ReportCommand report;
  auto* report_cmd = app.add_subcommand("report", "Render a leaderboard JSON and per-image error CSVs");
  report_cmd->add_option("--leaderboard", report.leaderboard, "Leaderboard JSON from evaluate")->required();
  report_cmd->add_option("--per-image-dir", report.per_image_dir, "Write one per-image CSV per row here");
  report_cmd->add_option("--output", report.output, "Output file (default stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*split_cmd) return cmd_split(g, split, out, err);
    if (*run_cmd) return cmd_run(g, run_opts, out, err);
    if (*eval_cmd) return cmd_evaluate(g, eval, out, err);
    if (*report_cmd) return cmd_report(g, report, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}

}  // namespace ccbench::cli
