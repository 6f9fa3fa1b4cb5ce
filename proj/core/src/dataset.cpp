#include "ccbench/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ccbench/error.hpp"
#include "ccbench/png_io.hpp"

namespace ccbench {
namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

constexpr double kThresholdSlackDeg = 1e-9;

RawEstimate parse_triple(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() ||
      !j[2].is_number()) {
    throw Error(ErrorCode::SchemaMismatch, "\"" + field + "\" must be an array of 3 numbers");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

Chromaticity parse_ground_truth(const json& j, const std::string& field, const std::string& id) {
  const RawEstimate raw = parse_triple(j, field);
  try {
    return normalize(raw);
  } catch (const Error& e) {
    throw Error(ErrorCode::GroundTruthInvalid, id + ": \"" + field + "\" " + e.what());
  }
}

json triple_json(const Chromaticity& c) { return json::array({c.r(), c.g(), c.b()}); }

std::optional<int> parse_level(const json& sidecar, const char* field) {
  if (!sidecar.contains(field)) return std::nullopt;
  const json& v = sidecar.at(field);
  if (!v.is_number_integer()) {
    throw Error(ErrorCode::SchemaMismatch, std::string("\"") + field + "\" must be an integer");
  }
  const auto level = v.get<long long>();
  if (level < 0 || level > 65535) {
    throw Error(ErrorCode::SchemaMismatch, std::string("\"") + field + "\" out of 16-bit range");
  }
  return static_cast<int>(level);
}

json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MissingFile, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SchemaMismatch, path.string() + ": " + e.what());
  }
}

std::map<std::string, std::string> dump_object(const json& obj, const std::set<std::string>& skip) {
  std::map<std::string, std::string> out;
  for (const auto& [key, value] : obj.items()) {
    if (!skip.contains(key)) out.emplace(key, value.dump());
  }
  return out;
}

}  // namespace

bool Polygon::contains(double x, double y) const noexcept {
  if (empty()) return false;
  bool inside = false;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2& a = vertices[i];
    const Point2& b = vertices[j];
    if ((a.y > y) != (b.y > y)) {
      const double cross_x = a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (x < cross_x) inside = !inside;
    }
  }
  return inside;
}

SceneAnnotation load_annotation(const fs::path& dir, const std::string& id) {
  const json sidecar = read_json_file(dir / (id + ".json"));
  if (!sidecar.is_object()) throw Error(ErrorCode::SchemaMismatch, id + ": sidecar is not an object");
  for (const char* required : {"left_gt", "right_gt"}) {
    if (!sidecar.contains(required)) {
      throw Error(ErrorCode::SchemaMismatch, id + ": missing \"" + required + "\"");
    }
  }

  SceneAnnotation a;
  a.id = id;
  a.left_gt = parse_ground_truth(sidecar.at("left_gt"), "left_gt", id);
  a.right_gt = parse_ground_truth(sidecar.at("right_gt"), "right_gt", id);
  if (sidecar.contains("dominant_gt") && !sidecar.at("dominant_gt").is_null()) {
    a.dominant_gt = parse_ground_truth(sidecar.at("dominant_gt"), "dominant_gt", id);
  }

  if (sidecar.contains("properties")) {
    const json& props = sidecar.at("properties");
    if (!props.is_object()) throw Error(ErrorCode::SchemaMismatch, id + ": \"properties\" must be an object");
    try {
      if (props.contains("indoor")) a.properties.indoor = props.at("indoor").get<bool>();
      if (props.contains("daytime")) a.properties.daytime = props.at("daytime").get<std::string>();
      if (props.contains("sharp")) a.properties.sharp = props.at("sharp").get<bool>();
    } catch (const json::exception& e) {
      throw Error(ErrorCode::SchemaMismatch, id + ": bad property type: " + e.what());
    }
    a.properties.extras = dump_object(props, {"indoor", "daytime", "sharp"});
  }

  a.black_level = parse_level(sidecar, "black_level");
  a.saturation_level = parse_level(sidecar, "saturation_level");

  if (sidecar.contains("cube_mask")) {
    const json& mask = sidecar.at("cube_mask");
    if (!mask.is_array()) throw Error(ErrorCode::SchemaMismatch, id + ": \"cube_mask\" must be an array");
    for (const json& vertex : mask) {
      if (!vertex.is_array() || vertex.size() != 2 || !vertex[0].is_number() || !vertex[1].is_number()) {
        throw Error(ErrorCode::SchemaMismatch, id + ": cube_mask vertices must be [x, y]");
      }
      a.cube_mask.vertices.push_back({vertex[0].get<double>(), vertex[1].get<double>()});
    }
  }

  if (sidecar.contains("metadata")) {
    const json& meta = sidecar.at("metadata");
    if (!meta.is_object()) throw Error(ErrorCode::SchemaMismatch, id + ": \"metadata\" must be an object");
    a.metadata = dump_object(meta, {});
  }
  return a;
}

SceneRecord load_record(const fs::path& dir, const std::string& id, const LoadOptions& options) {
  SceneRecord record;
  record.annotation = load_annotation(dir, id);
  const SceneAnnotation& a = record.annotation;

  Rgb16Image image = read_png_rgb16(dir / (id + ".png"));
  Raster& r = record.raster;
  r.width = image.width;
  r.height = image.height;
  r.samples = std::move(image.samples);
  r.black_level = options.black_level_override.value_or(a.black_level.value_or(options.default_black_level));
  r.saturation_level = a.saturation_level.value_or(options.default_saturation_level);
  if (r.black_level >= r.saturation_level) {
    throw Error(ErrorCode::SchemaMismatch, id + ": black level must be below saturation level");
  }
  const auto max_sample = std::max_element(r.samples.begin(), r.samples.end());
  if (*max_sample > r.saturation_level) {
    throw Error(ErrorCode::CorruptRaster, id + ": sample exceeds declared saturation level");
  }
  for (const Point2& v : a.cube_mask.vertices) {
    if (v.x < 0 || v.y < 0 || v.x > static_cast<double>(r.width) || v.y > static_cast<double>(r.height)) {
      throw Error(ErrorCode::SchemaMismatch, id + ": cube_mask vertex outside the raster");
    }
  }
  return record;
}

void write_record(const fs::path& dir, const SceneRecord& record) {
  const SceneAnnotation& a = record.annotation;
  json sidecar;
  sidecar["left_gt"] = triple_json(a.left_gt);
  sidecar["right_gt"] = triple_json(a.right_gt);
  if (a.dominant_gt) sidecar["dominant_gt"] = triple_json(*a.dominant_gt);

  json props = json::object();
  if (a.properties.indoor) props["indoor"] = *a.properties.indoor;
  if (a.properties.daytime) props["daytime"] = *a.properties.daytime;
  if (a.properties.sharp) props["sharp"] = *a.properties.sharp;
  for (const auto& [key, value] : a.properties.extras) props[key] = json::parse(value);
  sidecar["properties"] = props;

  sidecar["black_level"] = a.black_level.value_or(record.raster.black_level);
  sidecar["saturation_level"] = a.saturation_level.value_or(record.raster.saturation_level);

  if (!a.cube_mask.vertices.empty()) {
    json mask = json::array();
    for (const Point2& v : a.cube_mask.vertices) mask.push_back(json::array({v.x, v.y}));
    sidecar["cube_mask"] = mask;
  }
  if (!a.metadata.empty()) {
    json meta = json::object();
    for (const auto& [key, value] : a.metadata) meta[key] = json::parse(value);
    sidecar["metadata"] = meta;
  }

  std::ofstream out(dir / (a.id + ".json"), std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write sidecar for " + a.id);
  out << sidecar.dump(2) << '\n';
  if (!out) throw Error(ErrorCode::IoError, "cannot write sidecar for " + a.id);

  write_png_rgb16(dir / (a.id + ".png"),
                  Rgb16Image{record.raster.width, record.raster.height, record.raster.samples});
}

std::vector<std::string> list_record_ids(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error(ErrorCode::MissingFile, dir.string() + " is not a directory");
  std::set<std::string> ids;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension();
    if (ext == ".png" || ext == ".json") ids.insert(entry.path().stem().string());
  }
  return {ids.begin(), ids.end()};
}

LoadedDataset<SceneAnnotation> load_annotations(const fs::path& dir) {
  const auto ids = list_record_ids(dir);
  if (ids.empty()) throw Error(ErrorCode::NoRecords, "no records in " + dir.string());
  LoadedDataset<SceneAnnotation> out;
  for (const auto& id : ids) {
    if (!fs::exists(dir / (id + ".png"))) {
      throw Error(ErrorCode::MissingFile, id + ".png is missing");
    }
    try {
      out.items.push_back(load_annotation(dir, id));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::GroundTruthInvalid) throw;
      out.skipped.push_back({id, e.what()});
    }
  }
  return out;
}

AngleDeg face_angle(const SceneAnnotation& a, FaceMetric metric) {
  if (metric == FaceMetric::Recovery) return recovery_error(a.left_gt, a.right_gt);
  // Reproduction error is not symmetric; the larger direction is used so the
  // track assignment does not depend on face order.
  return std::max(reproduction_error(a.left_gt, a.right_gt), reproduction_error(a.right_gt, a.left_gt));
}

std::string_view to_string(TrackId track) {
  switch (track) {
    case TrackId::General: return "general";
    case TrackId::Indoor: return "indoor";
    case TrackId::TwoIlluminant: return "two";
  }
  return "general";
}

TrackId parse_track(std::string_view name) {
  if (name == "general") return TrackId::General;
  if (name == "indoor") return TrackId::Indoor;
  if (name == "two") return TrackId::TwoIlluminant;
  throw Error(ErrorCode::InvalidConfig, "unknown track \"" + std::string(name) + "\"");
}

int track_arity(TrackId track) { return track == TrackId::TwoIlluminant ? 2 : 1; }

const TrackEntry* TrackInstance::find(const std::string& id) const {
  const auto it = std::lower_bound(entries.begin(), entries.end(), id,
                                   [](const TrackEntry& e, const std::string& key) { return e.id < key; });
  return it != entries.end() && it->id == id ? &*it : nullptr;
}

Chromaticity single_ground_truth(const SceneAnnotation& a) {
  if (a.dominant_gt) return *a.dominant_gt;
  return normalize({a.left_gt.r() + a.right_gt.r(), a.left_gt.g() + a.right_gt.g(),
                    a.left_gt.b() + a.right_gt.b()});
}

std::map<TrackId, TrackInstance> split_tracks(std::span<const SceneAnnotation> annotations,
                                              const SplitOptions& options) {
  std::vector<const SceneAnnotation*> sorted;
  sorted.reserve(annotations.size());
  for (const auto& a : annotations) sorted.push_back(&a);
  std::sort(sorted.begin(), sorted.end(), [](const auto* l, const auto* r) { return l->id < r->id; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i]->id == sorted[i - 1]->id) {
      throw Error(ErrorCode::DuplicateId, "record id \"" + sorted[i]->id + "\" appears twice");
    }
  }

  std::map<TrackId, TrackInstance> tracks;
  for (TrackId t : {TrackId::General, TrackId::Indoor, TrackId::TwoIlluminant}) tracks[t].track = t;

  for (const SceneAnnotation* a : sorted) {
    // Angles recovered from stored vectors carry rounding noise, so a face
    // pair planted exactly at the threshold must still count as >= it.
    if (face_angle(*a, options.metric).value >= options.threshold_deg - kThresholdSlackDeg) {
      tracks[TrackId::TwoIlluminant].entries.push_back({a->id, a->left_gt, a->right_gt});
      continue;
    }
    const Chromaticity gt = single_ground_truth(*a);
    tracks[TrackId::General].entries.push_back({a->id, gt, std::nullopt});
    if (a->properties.indoor.value_or(false)) {
      tracks[TrackId::Indoor].entries.push_back({a->id, gt, std::nullopt});
    }
  }
  return tracks;
}

std::map<TrackId, TrackInstance> split_tracks(std::span<const SceneRecord> records,
                                              const SplitOptions& options) {
  std::vector<SceneAnnotation> annotations;
  annotations.reserve(records.size());
  for (const auto& r : records) annotations.push_back(r.annotation);
  return split_tracks(annotations, options);
}

UsableMask usable_mask(const SceneRecord& record, double saturation_fraction) {
  if (!(saturation_fraction > 0.0 && saturation_fraction <= 1.0)) {
    throw Error(ErrorCode::InvalidConfig, "saturation fraction must lie in (0, 1]");
  }
  const Raster& r = record.raster;
  const double ceiling = saturation_fraction * r.saturation_level;
  const Polygon& mask = record.annotation.cube_mask;

  UsableMask out{r.width, r.height, std::vector<std::uint8_t>(r.pixel_count(), 0), 0};
  for (std::size_t y = 0; y < r.height; ++y) {
    for (std::size_t x = 0; x < r.width; ++x) {
      const std::uint16_t* p = r.pixel(x, y);
      bool ok = true;
      for (int c = 0; c < 3; ++c) {
        ok = ok && p[c] > r.black_level && p[c] < ceiling;
      }
      if (ok && mask.contains(x + 0.5, y + 0.5)) ok = false;
      if (ok) {
        out.usable[y * r.width + x] = 1;
        ++out.count;
      }
    }
  }
  if (out.count == 0) {
    throw Error(ErrorCode::EmptyUsableRegion, record.id() + ": no usable pixels");
  }
  return out;
}

std::vector<UsablePixel> mask_pixels(const SceneRecord& record, double saturation_fraction) {
  const UsableMask mask = usable_mask(record, saturation_fraction);
  const Raster& r = record.raster;
  std::vector<UsablePixel> pixels;
  pixels.reserve(mask.count);
  for (std::size_t y = 0; y < r.height; ++y) {
    for (std::size_t x = 0; x < r.width; ++x) {
      if (!mask.at(x, y)) continue;
      const std::uint16_t* p = r.pixel(x, y);
      pixels.push_back({x, y,
                        {static_cast<double>(p[0] - r.black_level), static_cast<double>(p[1] - r.black_level),
                         static_cast<double>(p[2] - r.black_level)}});
    }
  }
  return pixels;
}

}  // namespace ccbench
