#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "irisdilate/errors.hpp"
#include "irisdilate/geometry.hpp"
#include "irisdilate/image.hpp"
#include "irisdilate/png_io.hpp"
#include "irisdilate/remap.hpp"
#include "irisdilate/sampling.hpp"
#include "irisdilate/sidecar.hpp"

namespace irisdilate {

/// Dilation levels to synthesize for every input, strictly increasing.
struct AugmentationPlan {
  std::vector<DilationLevel> levels;
  bool include_original = false;

  /// Image outputs produced per input record.
  std::size_t outputs_per_image() const noexcept {
    return levels.size() + (include_original ? 1 : 0);
  }
};

inline void validate(const AugmentationPlan& plan) {
  if (plan.levels.empty()) throw DomainError("augmentation plan has no levels");
  for (std::size_t i = 1; i < plan.levels.size(); ++i) {
    if (!(plan.levels[i - 1] < plan.levels[i])) {
      throw DomainError("augmentation plan levels must be strictly increasing");
    }
  }
}

/// `n_levels` dilation levels spaced evenly over [lambda_min, lambda_max],
/// both endpoints included exactly.
inline AugmentationPlan build_plan(int n_levels, DilationLevel lambda_min,
                                   DilationLevel lambda_max, bool include_original) {
  if (n_levels < 2) throw DomainError("a plan needs at least 2 levels");
  if (!(lambda_min < lambda_max)) throw DomainError("lambda_min must be below lambda_max");
  const double lo = lambda_min.value();
  const double hi = lambda_max.value();
  const double step = (hi - lo) / (n_levels - 1);
  AugmentationPlan plan;
  plan.include_original = include_original;
  plan.levels.reserve(static_cast<std::size_t>(n_levels));
  for (int i = 0; i + 1 < n_levels; ++i) plan.levels.emplace_back(lo + i * step);
  plan.levels.push_back(lambda_max);
  validate(plan);
  return plan;
}

/// `lam` followed by round(1000 * lambda), zero-padded to three digits.
inline std::string level_tag(DilationLevel level) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "lam%03ld", std::lround(level.value() * 1000.0));
  return buf;
}

inline std::string output_filename(std::string_view stem, DilationLevel level,
                                   std::string_view ext = ".png") {
  return std::string(stem) + "_" + level_tag(level) + std::string(ext);
}

inline constexpr std::string_view original_suffix = "_original";
inline constexpr std::string_view sidecar_extension = ".geom";
inline constexpr std::string_view mask_subdir = "masks";

struct DatasetRecord {
  std::filesystem::path image_path;
  std::optional<std::filesystem::path> mask_path;
  IrisGeometry geometry;
  std::optional<std::string> subject_id;
};

struct DatasetManifest {
  std::filesystem::path root;
  std::vector<DatasetRecord> records;
};

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

inline std::filesystem::path resolve(const std::filesystem::path& root, std::string_view p) {
  std::filesystem::path path{std::string(p)};
  return path.is_absolute() ? path : root / path;
}

}  // namespace detail

/// Parses the line-record manifest
/// `image_path,mask_path_or_dash,cx,cy,r_pupil,r_iris[,subject_id]`.
/// Relative paths resolve against `root`. Geometry values are parsed but not
/// validated here; invalid circles are skipped per record at run time.
inline DatasetManifest parse_manifest(std::string_view text, const std::filesystem::path& root) {
  DatasetManifest manifest;
  manifest.root = root;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = detail::trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto where = [&] { return "manifest line " + std::to_string(line_no) + ": "; };
    const auto fields = detail::split_fields(line);
    if (fields.size() != 6 && fields.size() != 7) {
      throw FormatError(where() + "expected 6 or 7 comma-separated fields, got " +
                        std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw FormatError(where() + "empty image path");

    DatasetRecord rec;
    rec.image_path = detail::resolve(root, fields[0]);
    if (fields[1] != "-" && !fields[1].empty()) rec.mask_path = detail::resolve(root, fields[1]);
    double nums[4];
    for (std::size_t i = 0; i < 4; ++i) {
      const auto v = detail::parse_double(fields[2 + i]);
      if (!v) {
        throw FormatError(where() + "field " + std::to_string(3 + i) + " is not a number");
      }
      nums[i] = *v;
    }
    rec.geometry = {nums[0], nums[1], nums[2], nums[3]};
    if (fields.size() == 7 && !fields[6].empty()) rec.subject_id = std::string(fields[6]);
    manifest.records.push_back(std::move(rec));
  }
  if (manifest.records.empty()) throw FormatError("manifest contains no records");
  return manifest;
}

inline DatasetManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open manifest '" + path.string() + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse_manifest(ss.str(), path.parent_path());
}

/// Writes one image (and mask) per plan level into `out_dir` and returns the
/// raster paths written. Images are named `<stem>_lamNNN.png` with a
/// `<stem>_lamNNN.geom` sidecar; masks go to `out_dir/masks/` under the image's
/// name. With `include_original` the inputs are re-encoded as
/// `<stem>_original.png`. All inputs are loaded and validated before anything
/// is written.
inline std::vector<std::filesystem::path> augment_record(const DatasetRecord& rec,
                                                         const AugmentationPlan& plan,
                                                         SamplingMethod method,
                                                         const std::filesystem::path& out_dir) {
  namespace fs = std::filesystem;
  validate(plan);
  validate(rec.geometry);
  const PixelGrid image = load_image(rec.image_path, Semantics::Intensity);
  std::optional<PixelGrid> mask;
  if (rec.mask_path) {
    mask = load_image(*rec.mask_path, Semantics::Label);
    if (mask->width() != image.width() || mask->height() != image.height()) {
      throw GeometryError("mask '" + rec.mask_path->string() + "' does not match image size");
    }
  }
  require_center_inside(image, rec.geometry);
  require_legal(image, method);

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (mask) fs::create_directories(out_dir / mask_subdir, ec);

  const std::string stem = rec.image_path.stem().string();
  std::vector<fs::path> written;
  written.reserve(plan.outputs_per_image() * (mask ? 2 : 1));

  const auto emit = [&](const std::string& name, const PixelGrid& img, const PixelGrid* msk,
                        const IrisGeometry& geom) {
    const fs::path image_out = out_dir / (name + ".png");
    save_image(img, image_out);
    written.push_back(image_out);
    write_sidecar(out_dir / (name + std::string(sidecar_extension)), geom,
                  geom.r_pupil / geom.r_iris);
    if (msk != nullptr) {
      const fs::path mask_out = out_dir / mask_subdir / (name + ".png");
      save_image(*msk, mask_out);
      written.push_back(mask_out);
    }
  };

  if (plan.include_original) {
    emit(stem + std::string(original_suffix), image, mask ? &*mask : nullptr, rec.geometry);
  }
  for (const DilationLevel level : plan.levels) {
    const IrisGeometry target = target_geometry(rec.geometry, level);
    const PixelGrid out = remap_between(image, rec.geometry, target, method);
    std::optional<PixelGrid> out_mask;
    if (mask) out_mask = remap_between(*mask, rec.geometry, target, SamplingMethod::Nearest);
    emit(stem + "_" + level_tag(level), out, out_mask ? &*out_mask : nullptr, target);
  }
  return written;
}

struct SkippedRecord {
  std::size_t index;
  std::string reason;
};

struct RunSummary {
  std::size_t processed = 0;
  std::size_t skipped = 0;
  std::size_t outputs = 0;
  double wall_time = 0.0;  // seconds
  std::vector<SkippedRecord> skips;
};

inline std::string format_summary(const RunSummary& s) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "processed=%zu skipped=%zu outputs=%zu seconds=%.3f",
                s.processed, s.skipped, s.outputs, s.wall_time);
  return buf;
}

using LogSink = std::function<void(std::string_view)>;

inline void log_to_stderr(std::string_view msg) { std::cerr << msg << '\n'; }

/// Augments every record once. Records are distributed over `workers`
/// threads; a failing record is logged and counted as skipped. Records whose
/// image stems collide would overwrite each other, so they abort the run
/// before any work starts.
inline RunSummary run_manifest(const DatasetManifest& manifest, const AugmentationPlan& plan,
                               SamplingMethod method, const std::filesystem::path& out_dir,
                               int workers = 1, const LogSink& log = log_to_stderr) {
  if (workers < 1) throw DomainError("worker count must be at least 1");
  if (manifest.records.empty()) throw FormatError("manifest contains no records");
  validate(plan);
  {
    std::set<std::string> stems;
    for (const auto& rec : manifest.records) {
      if (!stems.insert(rec.image_path.stem().string()).second) {
        throw FormatError("duplicate image stem '" + rec.image_path.stem().string() +
                          "' in manifest");
      }
    }
  }

  const auto start = std::chrono::steady_clock::now();
  RunSummary summary;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < manifest.records.size(); i = next++) {
      const auto& rec = manifest.records[i];
      try {
        const auto outputs = augment_record(rec, plan, method, out_dir);
        std::lock_guard lock(mu);
        ++summary.processed;
        summary.outputs += outputs.size();
      } catch (const std::exception& e) {
        std::lock_guard lock(mu);
        ++summary.skipped;
        summary.skips.push_back({i, e.what()});
        if (log) log("skipping record " + std::to_string(i) + " (" + rec.image_path.string() +
                     "): " + e.what());
      }
    }
  };

  const int n = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers),
                                                       manifest.records.size()));
  if (n == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::sort(summary.skips.begin(), summary.skips.end(),
            [](const SkippedRecord& a, const SkippedRecord& b) { return a.index < b.index; });
  summary.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace irisdilate
