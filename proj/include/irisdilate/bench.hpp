#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>

#include "irisdilate/errors.hpp"
#include "irisdilate/geometry.hpp"
#include "irisdilate/image.hpp"
#include "irisdilate/pipeline.hpp"
#include "irisdilate/remap.hpp"
#include "irisdilate/sampling.hpp"

namespace irisdilate {

struct BenchReport {
  int n_images = 0;
  double total_ms = 0.0;
  double ms_per_image = 0.0;
  double images_per_sec = 0.0;
  int width = 0;
  int height = 0;
  int channels = 0;
  SamplingMethod method = SamplingMethod::Nearest;
  int threads = 1;
};

inline constexpr int bench_min_iterations = 10;
inline constexpr int bench_warmup_iterations = 3;

/// Times `n_iters` remaps of `image`, cycling the target dilation through the
/// 19-level plan over [0.15, 0.75]. Only the remap is timed; warmup runs are
/// discarded.
inline BenchReport run_bench(const PixelGrid& image, const IrisGeometry& g, int n_iters,
                             SamplingMethod method, int threads = 1) {
  if (n_iters < bench_min_iterations) {
    throw DomainError("benchmark needs at least " + std::to_string(bench_min_iterations) +
                      " iterations");
  }
  if (threads < 1) throw DomainError("thread count must be at least 1");
  validate(g);
  const AugmentationPlan plan = build_plan(19, DilationLevel(0.15), DilationLevel(0.75), false);

  std::uint64_t sink = 0;
  const auto run_one = [&](int i) {
    const DilationLevel level = plan.levels[static_cast<std::size_t>(i) % plan.levels.size()];
    const RemapResult res = remap_dilation(image, g, level, method, threads);
    sink += res.image.data()[res.image.data().size() / 2];
  };
  for (int i = 0; i < bench_warmup_iterations; ++i) run_one(i);

  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < n_iters; ++i) run_one(i);
  const auto stop = std::chrono::steady_clock::now();
  static_cast<void>(sink);

  BenchReport r;
  r.n_images = n_iters;
  r.total_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  r.ms_per_image = r.total_ms / n_iters;
  r.images_per_sec = r.ms_per_image > 0.0 ? 1000.0 / r.ms_per_image : 0.0;
  r.width = image.width();
  r.height = image.height();
  r.channels = image.channels();
  r.method = method;
  r.threads = threads;
  return r;
}

inline std::string format_report(const BenchReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "n_images=%d total_ms=%.3f ms_per_image=%.4f images_per_sec=%.1f shape=%dx%dx%d "
                "method=%s threads=%d",
                r.n_images, r.total_ms, r.ms_per_image, r.images_per_sec, r.width, r.height,
                r.channels, to_string(r.method), r.threads);
  return buf;
}

}  // namespace irisdilate
