#include "ccbench/submission.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "ccbench/error.hpp"

namespace ccbench {
namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_number(const std::string& text, std::size_t line_no) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::MalformedInput, fmt::format("line {}: \"{}\" is not a number", line_no, text));
  }
  return value;
}

}  // namespace

Submission parse_submission_csv(std::istream& in, TrackId track) {
  const int arity = track_arity(track);
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::MalformedInput, "submission is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  static const std::string kSingleHeader = "image_id,r,g,b";
  static const std::string kPairHeader = "image_id,r1,g1,b1,r2,g2,b2";
  if (line != kSingleHeader && line != kPairHeader) {
    throw Error(ErrorCode::MalformedInput, "unexpected submission header \"" + line + "\"");
  }
  const int file_arity = line == kSingleHeader ? 1 : 2;
  if (file_arity != arity) {
    throw Error(ErrorCode::ArityMismatch,
                fmt::format("track {} needs {} illuminant(s) per image, file has {}", to_string(track), arity,
                            file_arity));
  }

  Submission sub;
  sub.track = track;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != static_cast<std::size_t>(1 + 3 * arity)) {
      throw Error(ErrorCode::MalformedInput, fmt::format("line {}: expected {} fields", line_no, 1 + 3 * arity));
    }
    if (fields[0].empty()) throw Error(ErrorCode::MalformedInput, fmt::format("line {}: empty image_id", line_no));
    SubmissionRow row{fields[0], {}};
    for (int k = 0; k < arity; ++k) {
      row.estimates.push_back({parse_number(fields[1 + 3 * k], line_no), parse_number(fields[2 + 3 * k], line_no),
                               parse_number(fields[3 + 3 * k], line_no)});
    }
    sub.rows.push_back(std::move(row));
  }
  return sub;
}

Submission read_submission_csv(const std::filesystem::path& path, TrackId track) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MissingFile, "cannot open " + path.string());
  return parse_submission_csv(in, track);
}

void write_submission_csv(std::ostream& out, const Submission& submission) {
  const int arity = track_arity(submission.track);
  out << (arity == 1 ? "image_id,r,g,b\n" : "image_id,r1,g1,b1,r2,g2,b2\n");
  for (const auto& row : submission.rows) {
    if (row.estimates.size() != static_cast<std::size_t>(arity)) {
      throw Error(ErrorCode::ArityMismatch, row.image_id + ": wrong number of estimates");
    }
    out << row.image_id;
    for (const RawEstimate& e : row.estimates) out << fmt::format(",{},{},{}", e.r, e.g, e.b);
    out << '\n';
  }
}

void write_submission_csv(const std::filesystem::path& path, const Submission& submission) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  write_submission_csv(out, submission);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
}

void check_coverage(const Submission& submission, const TrackInstance& track) {
  std::set<std::string> seen;
  for (const auto& row : submission.rows) {
    if (!seen.insert(row.image_id).second) {
      throw Error(ErrorCode::ExtraImageId, "image \"" + row.image_id + "\" listed more than once");
    }
    if (track.find(row.image_id) == nullptr) {
      throw Error(ErrorCode::ExtraImageId, "image \"" + row.image_id + "\" is not part of the track");
    }
  }
  for (const auto& entry : track.entries) {
    if (!seen.contains(entry.id)) {
      throw Error(ErrorCode::MissingImageId, "no estimate for image \"" + entry.id + "\"");
    }
  }
}

}  // namespace ccbench
