#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ccbench/color.hpp"
#include "ccbench/dataset.hpp"

namespace ccbench {

struct SubmissionRow {
  std::string image_id;
  std::vector<RawEstimate> estimates;  // one or two
};

/// A team's prediction file for one track.
///
/// CSV layout: header `image_id,r,g,b` (one illuminant) or
/// `image_id,r1,g1,b1,r2,g2,b2` (two illuminants), UTF-8, LF endings.
struct Submission {
  std::string team;
  std::string algorithm;
  TrackId track = TrackId::General;
  std::vector<SubmissionRow> rows;
};

/// Parses CSV text. Throws MalformedInput on syntax problems and
/// ArityMismatch when the header does not match the track.
Submission parse_submission_csv(std::istream& in, TrackId track);
Submission read_submission_csv(const std::filesystem::path& path, TrackId track);

void write_submission_csv(std::ostream& out, const Submission& submission);
void write_submission_csv(const std::filesystem::path& path, const Submission& submission);

/// Throws MissingImageId / ExtraImageId unless the submission covers the
/// track's ids exactly once each.
void check_coverage(const Submission& submission, const TrackInstance& track);

}  // namespace ccbench
