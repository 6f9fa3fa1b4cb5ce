#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccbench/color.hpp"
#include "ccbench/raster.hpp"

namespace ccbench {

struct SceneProperties {
  std::optional<bool> indoor;
  std::optional<std::string> daytime;
  std::optional<bool> sharp;
  /// Any other property keys, values kept as serialized JSON.
  std::map<std::string, std::string> extras;

  friend bool operator==(const SceneProperties&, const SceneProperties&) = default;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Polygon in pixel coordinates, filled with the even-odd rule. A pixel is
/// covered when its centre (x + 0.5, y + 0.5) is inside.
struct Polygon {
  std::vector<Point2> vertices;

  bool empty() const noexcept { return vertices.size() < 3; }
  bool contains(double x, double y) const noexcept;

  friend bool operator==(const Polygon&, const Polygon&) = default;
};

/// Everything in the JSON sidecar. Loadable without decoding the raster.
struct SceneAnnotation {
  std::string id;
  Chromaticity left_gt = Chromaticity::white();
  Chromaticity right_gt = Chromaticity::white();
  std::optional<Chromaticity> dominant_gt;
  SceneProperties properties;
  std::optional<int> black_level;
  std::optional<int> saturation_level;
  Polygon cube_mask;
  /// Capture parameters (ISO, exposure time, ...), values as serialized JSON.
  std::map<std::string, std::string> metadata;

  friend bool operator==(const SceneAnnotation&, const SceneAnnotation&) = default;
};

struct SceneRecord {
  SceneAnnotation annotation;
  Raster raster;

  const std::string& id() const noexcept { return annotation.id; }

  friend bool operator==(const SceneRecord&, const SceneRecord&) = default;
};

struct LoadOptions {
  /// Used when the sidecar has no "black_level".
  int default_black_level = 2048;
  /// When set, wins over the sidecar value.
  std::optional<int> black_level_override;
  /// Used when the sidecar has no "saturation_level".
  int default_saturation_level = 65535;
};

/// Parses <dir>/<id>.json. Throws MissingFile, SchemaMismatch or
/// GroundTruthInvalid.
SceneAnnotation load_annotation(const std::filesystem::path& dir, const std::string& id);

/// Loads <dir>/<id>.png and <dir>/<id>.json. The optional .jpg preview is
/// ignored. Throws MissingFile, CorruptRaster, SchemaMismatch or
/// GroundTruthInvalid.
SceneRecord load_record(const std::filesystem::path& dir, const std::string& id,
                        const LoadOptions& options = {});

/// Writes <dir>/<id>.png and <dir>/<id>.json so load_record() reproduces
/// the record.
void write_record(const std::filesystem::path& dir, const SceneRecord& record);

/// Ids having a .png or .json file in dir, sorted lexicographically.
std::vector<std::string> list_record_ids(const std::filesystem::path& dir);

struct SkippedRecord {
  std::string id;
  std::string reason;
};

template <typename T>
struct LoadedDataset {
  std::vector<T> items;
  std::vector<SkippedRecord> skipped;
};

/// Loads every annotation in dir. Records with invalid ground truth are
/// skipped and reported; other errors propagate. Throws NoRecords when the
/// directory holds no records at all.
LoadedDataset<SceneAnnotation> load_annotations(const std::filesystem::path& dir);

enum class FaceMetric { Recovery, Reproduction };

/// Angle between the two SpyderCube face ground truths.
AngleDeg face_angle(const SceneAnnotation& annotation, FaceMetric metric = FaceMetric::Recovery);
inline AngleDeg face_angle(const SceneRecord& record, FaceMetric metric = FaceMetric::Recovery) {
  return face_angle(record.annotation, metric);
}

enum class TrackId { General, Indoor, TwoIlluminant };

std::string_view to_string(TrackId track);
/// Accepts "general", "indoor", "two". Throws InvalidConfig otherwise.
TrackId parse_track(std::string_view name);
/// Number of illuminants per image the track expects.
int track_arity(TrackId track);

struct TrackEntry {
  std::string id;
  Chromaticity primary;
  /// Set only for the two-illuminant track.
  std::optional<Chromaticity> secondary;
};

struct TrackInstance {
  TrackId track = TrackId::General;
  std::vector<TrackEntry> entries;  // sorted by id

  const TrackEntry* find(const std::string& id) const;
};

struct SplitOptions {
  double threshold_deg = 2.0;
  FaceMetric metric = FaceMetric::Recovery;
};

/// Ground truth used for the single-illuminant tracks: dominant_gt when
/// present, otherwise the normalized mean of the two faces.
Chromaticity single_ground_truth(const SceneAnnotation& annotation);

/// General: face angle < threshold. Indoor: General with indoor == true.
/// TwoIlluminant: face angle >= threshold. Throws DuplicateId.
std::map<TrackId, TrackInstance> split_tracks(std::span<const SceneAnnotation> annotations,
                                              const SplitOptions& options = {});
std::map<TrackId, TrackInstance> split_tracks(std::span<const SceneRecord> records,
                                              const SplitOptions& options = {});

/// Per-pixel usability: outside the cube mask and every channel strictly
/// between the black level and saturation_fraction * saturation_level.
struct UsableMask {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> usable;
  std::size_t count = 0;

  bool at(std::size_t x, std::size_t y) const noexcept { return usable[y * width + x] != 0; }
};

/// Throws EmptyUsableRegion when no pixel survives.
UsableMask usable_mask(const SceneRecord& record, double saturation_fraction = 0.95);

struct UsablePixel {
  std::size_t x = 0;
  std::size_t y = 0;
  std::array<double, 3> rgb{};  // black-level subtracted
};

/// Usable pixels in row-major order. Throws EmptyUsableRegion.
std::vector<UsablePixel> mask_pixels(const SceneRecord& record, double saturation_fraction = 0.95);

}  // namespace ccbench
