// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dataset_fixture.hpp"
#include "irisdilate/irisdilate.hpp"
#include "test_support.hpp"

using namespace irisdilate;
namespace fs = std::filesystem;
namespace t = irisdilate::testing;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), f, a, b, c);
  return buf;
}

Verdict radial_fixed_points() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> r3d(5, 1000), frac(0.01, 0.99);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const double r3 = r3d(rng);
    const auto p = RadialMapParams::from_radii(frac(rng) * r3, frac(rng) * r3, r3);
    const double left_r2 = radial_map_inverse(std::nextafter(p.r2(), 0.0), p);
    const double left_r3 = radial_map_inverse(std::nextafter(p.r3(), 0.0), p);
    const double at_r2 = radial_map_inverse(p.r2(), p);
    const double at_r3 = radial_map_inverse(p.r3(), p);
    for (double e : {std::abs(at_r2 - p.r1()), std::abs(at_r3 - p.r3()), std::abs(left_r2 - at_r2),
                     std::abs(left_r3 - at_r3)}) {
      worst = std::max(worst, e);
    }
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-9 && elapsed < 1.0,
          fmt("max error %.3g (tol 1e-9), %.4f s (limit 1 s)", worst, elapsed)};
}

Verdict worked_value() {
  const double v = radial_map_inverse(90, RadialMapParams::from_radii(30, 60, 120));
  return {v == 75.0, fmt("T^-1(90; 30, 60, 120) = %.17g, expected 75", v)};
}

Verdict identity_transform() {
  std::mt19937_64 rng(1002);
  const auto img = t::random_grid(rng, 320, 280, 1, Semantics::Intensity);
  const auto eye = make_synthetic_eye(320, 280, {160, 140, 31.02, 110});
  int checked = 0;
  bool ok = true;
  for (const IrisGeometry g : {IrisGeometry{160, 140, 31.02, 110}, IrisGeometry{150.7, 133.3, 45, 125},
                               IrisGeometry{20, 30, 12, 90}}) {
    for (const auto* src : {&img, &eye}) {
      ok = ok && remap_dilation(*src, g, dilation_level(g), SamplingMethod::Nearest).image == *src;
      ++checked;
    }
  }
  return {ok, fmt("%.0f 320x280 cases byte-identical", checked)};
}

Verdict outside_iris_identity() {
  std::mt19937_64 rng(1003);
  std::uniform_real_distribution<double> lam(0.05, 0.95), cx(0, 319), cy(0, 279), r3(15, 160),
      frac(0.1, 0.9);
  long long compared = 0, mismatched = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto img = t::random_grid(rng, 320, 280, trial % 2 ? 3 : 1, Semantics::Intensity);
    const double ri = r3(rng);
    const IrisGeometry g{cx(rng), cy(rng), frac(rng) * ri, ri};
    const auto method = trial % 4 < 2 ? SamplingMethod::Nearest : SamplingMethod::Bilinear;
    const auto out = remap_dilation(img, g, DilationLevel(lam(rng)), method).image;
    for (int y = 0; y < 280; ++y)
      for (int x = 0; x < 320; ++x)
        if (std::hypot(x - g.center_x, y - g.center_y) >= g.r_iris + 1)
          for (int c = 0; c < img.channels(); ++c) {
            ++compared;
            mismatched += out.at(x, y, c) != img.at(x, y, c);
          }
  }
  return {mismatched == 0 && compared > 0,
          fmt("%.0f of %.0f samples outside R3+1 changed", static_cast<double>(mismatched),
              static_cast<double>(compared))};
}

PixelGrid interior_rows(const PixelGrid& sheet) {
  PixelGrid out(sheet.width(), sheet.height() - 2, sheet.channels());
  for (int y = 1; y + 1 < sheet.height(); ++y)
    std::copy(sheet.row(y).begin(), sheet.row(y).end(), out.row(y - 1).begin());
  return out;
}

Verdict rubber_sheet_invariance() {
  const IrisGeometry g{160, 140, 0.3 * 110, 110};
  const auto eye = make_synthetic_eye(320, 280, g);
  std::vector<PixelGrid> sheets;
  for (double lam : {0.2, 0.4, 0.6}) {
    const auto res = remap_dilation(eye, g, DilationLevel(lam), SamplingMethod::Nearest);
    sheets.push_back(interior_rows(rubber_sheet(res.image, res.geometry).pixels()));
  }
  double worst = 0;
  for (std::size_t i = 0; i < sheets.size(); ++i)
    for (std::size_t j = i + 1; j < sheets.size(); ++j)
      worst = std::max(worst, mean_abs_diff(sheets[i], sheets[j]));
  const double limit = 0.02 * 255;
  return {worst <= limit, fmt("worst pairwise mean abs diff %.3f (limit %.2f)", worst, limit)};
}

Verdict mask_round_trip() {
  const IrisGeometry g{160, 140, 0.3 * 110, 110};
  const auto mask = make_annulus_mask(320, 280, g);
  const auto there = remap_mask(mask, g, DilationLevel(0.6));
  const auto back = remap_mask(there.image, there.geometry, DilationLevel(0.3));
  const double v = iou(back.image, mask);

  const auto four = make_four_class_mask(320, 280, g);
  const auto in = label_set(four);
  bool closed = true;
  for (double lam : {0.15, 0.3, 0.45, 0.6, 0.75}) {
    for (auto id : label_set(remap_mask(four, g, DilationLevel(lam)).image))
      closed = closed && std::binary_search(in.begin(), in.end(), id);
  }
  return {v >= 0.98 && closed,
          fmt("round-trip IoU %.5f (min 0.98), 4-class closure ", v) + (closed ? "held" : "BROKEN")};
}

Verdict plan_reproduction() {
  const auto plan = build_plan(19, DilationLevel(0.15), DilationLevel(0.75), true);
  bool ok = plan.levels.size() == 19 && plan.levels.front().value() == 0.15 &&
            plan.levels.back().value() == 0.75;
  double worst = 0;
  for (std::size_t i = 1; i < plan.levels.size(); ++i)
    worst = std::max(worst, std::abs(plan.levels[i].value() - plan.levels[i - 1].value() - 1.0 / 30));
  ok = ok && worst <= 1e-12;
  const std::size_t total = 1920 * plan.outputs_per_image();
  ok = ok && total == 38400;
  return {ok, fmt("19 levels, spacing error %.2g, 1920 inputs -> %.0f outputs", worst,
                  static_cast<double>(total))};
}

Verdict iou_oracle() {
  std::mt19937_64 rng(1004);
  double worst = 0;
  bool symmetric = true, bounded = true;
  for (int i = 0; i < 50; ++i) {
    const auto a = t::random_grid(rng, 16, 16, 1, Semantics::Label, 1);
    const auto b = t::random_grid(rng, 16, 16, 1, Semantics::Label, 1);
    const auto n = t::brute_force_counts(a, b);
    const double v = iou(a, b);
    worst = std::max(worst, std::abs(v - n.inter / (n.uni + 1e-6)));
    symmetric = symmetric && v == iou(b, a);
    bounded = bounded && v >= 0.0 && v < 1.0 + 1e-6 && iou(a, a) >= 1.0 - 1e-6;
  }
  return {worst <= 1e-9 && symmetric && bounded,
          fmt("max deviation %.3g (tol 1e-9), symmetric %.0f, bounded %.0f", worst, symmetric,
              bounded)};
}

Verdict throughput() {
  const IrisGeometry g{160, 140, 33, 110};
  const auto eye = make_synthetic_eye(320, 280, g);
  const auto start = std::chrono::steady_clock::now();
  const auto r = run_bench(eye, g, 100, SamplingMethod::Nearest, 1);
  const double elapsed = seconds_since(start);
  return {r.images_per_sec >= 300.0 && elapsed < 5.0,
          fmt("%.1f images/s (min 300), %.3f ms/image, bench ran %.3f s (limit 5 s)",
              r.images_per_sec, r.ms_per_image, elapsed)};
}

std::map<std::string, std::string> read_tree(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (!e.is_regular_file()) continue;
    std::ifstream in(e.path(), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    files[fs::relative(e.path(), root).string()] = ss.str();
  }
  return files;
}

Verdict determinism() {
  t::TempDir dir("acceptance_det");
  const auto manifest = load_manifest(t::write_dataset(dir.path(), 8, true, -1, 160, 140));
  const auto plan = build_plan(19, DilationLevel(0.15), DilationLevel(0.75), true);
  const LogSink quiet = [](std::string_view) {};
  run_manifest(manifest, plan, SamplingMethod::Nearest, dir / "w1", 1, quiet);
  run_manifest(manifest, plan, SamplingMethod::Nearest, dir / "w8", 8, quiet);
  const auto a = read_tree(dir / "w1");
  const auto b = read_tree(dir / "w8");
  return {!a.empty() && a == b, fmt("%.0f files compared, trees %s", static_cast<double>(a.size())) +
                                    (a == b ? "identical" : "DIFFER")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"radial-map fixed points and continuity", radial_fixed_points},
      {"worked value r'=90 -> 75", worked_value},
      {"identity transform", identity_transform},
      {"outside-iris identity", outside_iris_identity},
      {"rubber-sheet invariance", rubber_sheet_invariance},
      {"mask round-trip and label closure", mask_round_trip},
      {"plan reproduction", plan_reproduction},
      {"IoU brute-force oracle", iou_oracle},
      {"single-thread throughput", throughput},
      {"worker-count determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v{false, {}};
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s  %-40s %s\n", v.pass ? "PASS" : "FAIL", name.c_str(), v.detail.c_str());
    failed += v.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
