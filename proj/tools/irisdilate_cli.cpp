// Command-line front end: dilate, augment, normalize, iou, preview, bench.
//
// Exit codes: 0 success, 1 usage or out-of-domain argument, 2 data error
// (bad geometry, manifest, raster content, illegal sampler), 3 I/O error.

#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irisdilate/irisdilate.hpp"

namespace fs = std::filesystem;
using namespace irisdilate;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kData = 2, kIo = 3 };

struct GeometryFlags {
  std::optional<double> cx, cy, r_pupil, r_iris;
  std::string sidecar;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--cx", cx, "Iris center x (pixels)");
    cmd.add_option("--cy", cy, "Iris center y (pixels)");
    cmd.add_option("--r-pupil", r_pupil, "Pupil radius (pixels)");
    cmd.add_option("--r-iris", r_iris, "Iris radius (pixels)");
    cmd.add_option("--geometry", sidecar, "Geometry sidecar file; explicit flags take precedence");
  }

  // Flags override sidecar values field by field.
  IrisGeometry resolve() const {
    std::optional<IrisGeometry> base;
    if (!sidecar.empty()) base = read_sidecar(sidecar).geometry;
    const auto pick = [&](const std::optional<double>& flag, double IrisGeometry::*field,
                          const char* name) {
      if (flag) return *flag;
      if (base) return (*base).*field;
      throw CLI::RequiredError(name);
    };
    return {pick(cx, &IrisGeometry::center_x, "--cx"), pick(cy, &IrisGeometry::center_y, "--cy"),
            pick(r_pupil, &IrisGeometry::r_pupil, "--r-pupil"),
            pick(r_iris, &IrisGeometry::r_iris, "--r-iris")};
  }
};

SamplingMethod method_from(const std::string& name) {
  const auto m = parse_sampling_method(name);
  if (!m) throw DomainError("unknown sampling method '" + name + "'");
  return *m;
}

fs::path sidecar_path_for(const fs::path& raster) {
  fs::path p = raster;
  p.replace_extension(std::string(sidecar_extension));
  return p;
}

int guarded(const std::function<void()>& body) {
  try {
    body();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  }
}

const std::vector<std::string> kMethods{"nearest", "bilinear"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthesize iris images at arbitrary pupil dilation levels"};
  app.require_subcommand(1);

  // dilate
  auto* dilate = app.add_subcommand("dilate", "Re-render one image at a target dilation level");
  std::string d_image, d_out, d_method = "nearest";
  double d_lambda = 0.0;
  bool d_mask = false;
  GeometryFlags d_geom;
  dilate->add_option("--image", d_image, "Input PNG")->required();
  d_geom.add_to(*dilate);
  dilate->add_option("--lambda", d_lambda, "Target dilation level in (0, 1)")->required();
  dilate->add_option("--method", d_method, "Sampling method")
      ->check(CLI::IsMember(kMethods))->capture_default_str();
  dilate->add_option("--out", d_out, "Output PNG; a .geom sidecar is written beside it")
      ->required();
  dilate->add_flag("--mask-mode", d_mask, "Treat the input as a label mask (nearest only)");

  // augment
  auto* augment = app.add_subcommand("augment", "Batch-augment every record of a manifest");
  std::string a_manifest, a_out, a_method = "nearest";
  int a_levels = 19, a_workers = 1;
  double a_min = 0.15, a_max = 0.75;
  bool a_original = true;
  augment->add_option("--manifest", a_manifest, "Manifest file")->required();
  augment->add_option("--out-dir", a_out, "Output directory")->required();
  augment->add_option("--levels", a_levels, "Number of dilation levels")->capture_default_str();
  augment->add_option("--lambda-min", a_min, "Smallest dilation level")->capture_default_str();
  augment->add_option("--lambda-max", a_max, "Largest dilation level")->capture_default_str();
  augment->add_option("--method", a_method, "Sampling method for images")
      ->check(CLI::IsMember(kMethods))->capture_default_str();
  augment->add_option("--workers", a_workers, "Worker threads")->capture_default_str();
  augment->add_flag("--include-original,!--no-include-original", a_original,
                    "Also re-emit each input unchanged (default on)");

  // normalize
  auto* normalize = app.add_subcommand("normalize", "Unwrap the iris annulus into a rubber sheet");
  std::string n_image, n_out, n_method = "bilinear";
  int n_width = RubberSheet::default_width, n_height = RubberSheet::default_height;
  bool n_mask = false;
  GeometryFlags n_geom;
  normalize->add_option("--image", n_image, "Input PNG")->required();
  n_geom.add_to(*normalize);
  normalize->add_option("--width", n_width, "Angular samples")->capture_default_str();
  normalize->add_option("--height", n_height, "Radial samples")->capture_default_str();
  normalize->add_option("--method", n_method, "Sampling method")
      ->check(CLI::IsMember(kMethods))->capture_default_str();
  normalize->add_flag("--mask-mode", n_mask, "Treat the input as a label mask (nearest only)");
  normalize->add_option("--out", n_out, "Output PNG")->required();

  // iou
  auto* iou_cmd = app.add_subcommand("iou", "Print the IoU of two masks with six decimals");
  std::string i_a, i_b;
  std::optional<int> i_class;
  double i_eps = IoUConfig{}.epsilon;
  iou_cmd->add_option("--mask-a", i_a, "First mask PNG")->required();
  iou_cmd->add_option("--mask-b", i_b, "Second mask PNG")->required();
  iou_cmd->add_option("--class", i_class, "Score one class id of a multi-class mask")
      ->check(CLI::Range(0, 255));
  iou_cmd->add_option("--epsilon", i_eps, "Denominator guard")->capture_default_str();

  // preview
  auto* preview = app.add_subcommand("preview", "Write the input and its re-renders side by side");
  std::string p_image, p_out, p_method = "nearest";
  std::vector<double> p_levels;
  bool p_mask = false;
  GeometryFlags p_geom;
  preview->add_option("--image", p_image, "Input PNG")->required();
  p_geom.add_to(*preview);
  preview->add_option("--levels", p_levels, "Comma-separated dilation levels")
      ->required()->delimiter(',');
  preview->add_option("--method", p_method, "Sampling method")
      ->check(CLI::IsMember(kMethods))->capture_default_str();
  preview->add_flag("--mask-mode", p_mask, "Treat the input as a label mask (nearest only)");
  preview->add_option("--out", p_out, "Output PNG")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Measure remap throughput");
  std::string b_image, b_method = "nearest";
  int b_iters = 100, b_threads = 1;
  GeometryFlags b_geom;
  bench->add_option("--image", b_image, "Input PNG (default: synthetic 320x280 grayscale eye)");
  b_geom.add_to(*bench);
  bench->add_option("--iters", b_iters, "Timed iterations")->capture_default_str();
  bench->add_option("--method", b_method, "Sampling method")
      ->check(CLI::IsMember(kMethods))->capture_default_str();
  bench->add_option("--threads", b_threads, "Threads per remap")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*dilate) {
    return guarded([&] {
      const IrisGeometry g = d_geom.resolve();
      const DilationLevel lambda(d_lambda);
      const SamplingMethod method = d_mask ? SamplingMethod::Nearest : method_from(d_method);
      if (d_mask && d_method != "nearest") {
        throw SemanticsError("label masks can only be resampled with nearest-neighbour sampling");
      }
      const PixelGrid image =
          load_image(d_image, d_mask ? Semantics::Label : Semantics::Intensity);
      const RemapResult res = remap_dilation(image, g, lambda, method);
      save_image(res.image, d_out);
      write_sidecar(sidecar_path_for(d_out), res.geometry, res.lambda.value());
      std::printf("lambda=%.6f\n", dilation_level(res.geometry).value());
    });
  }
  if (*augment) {
    return guarded([&] {
      const SamplingMethod method = method_from(a_method);
      const AugmentationPlan plan =
          build_plan(a_levels, DilationLevel(a_min), DilationLevel(a_max), a_original);
      const DatasetManifest manifest = load_manifest(a_manifest);
      const RunSummary summary = run_manifest(manifest, plan, method, a_out, a_workers);
      std::printf("%s\n", format_summary(summary).c_str());
    });
  }
  if (*normalize) {
    return guarded([&] {
      const IrisGeometry g = n_geom.resolve();
      if (n_mask && n_method != "nearest" && normalize->count("--method") > 0) {
        throw SemanticsError("label masks can only be resampled with nearest-neighbour sampling");
      }
      const SamplingMethod method = n_mask ? SamplingMethod::Nearest : method_from(n_method);
      const PixelGrid image =
          load_image(n_image, n_mask ? Semantics::Label : Semantics::Intensity);
      const RubberSheet sheet = rubber_sheet(image, g, n_width, n_height, method);
      save_image(sheet.pixels(), n_out);
    });
  }
  if (*iou_cmd) {
    return guarded([&] {
      const PixelGrid a = load_image(i_a, Semantics::Label);
      const PixelGrid b = load_image(i_b, Semantics::Label);
      if (a.width() != b.width() || a.height() != b.height()) {
        throw FormatError("masks have different dimensions");
      }
      const IoUConfig cfg{i_eps};
      const double v = i_class ? per_class_iou(a, b, static_cast<std::uint8_t>(*i_class), cfg)
                               : iou(a, b, cfg);
      std::printf("%.6f\n", v);
    });
  }
  if (*preview) {
    return guarded([&] {
      const IrisGeometry g = p_geom.resolve();
      if (p_mask && p_method != "nearest") {
        throw SemanticsError("label masks can only be resampled with nearest-neighbour sampling");
      }
      const SamplingMethod method = p_mask ? SamplingMethod::Nearest : method_from(p_method);
      std::vector<DilationLevel> levels;
      for (double v : p_levels) levels.emplace_back(v);
      const PixelGrid image =
          load_image(p_image, p_mask ? Semantics::Label : Semantics::Intensity);
      save_image(make_preview_strip(image, g, levels, method), p_out);
    });
  }
  if (*bench) {
    return guarded([&] {
      const SamplingMethod method = method_from(b_method);
      PixelGrid image;
      IrisGeometry g;
      if (b_image.empty()) {
        const IrisGeometry defaults{160.0, 140.0, 33.0, 110.0};
        const bool any_flag = b_geom.cx || b_geom.cy || b_geom.r_pupil || b_geom.r_iris ||
                              !b_geom.sidecar.empty();
        g = any_flag ? b_geom.resolve() : defaults;
        image = make_synthetic_eye(320, 280, g);
      } else {
        g = b_geom.resolve();
        image = load_image(b_image);
      }
      std::printf("%s\n", format_report(run_bench(image, g, b_iters, method, b_threads)).c_str());
    });
  }
  return kUsage;
}
