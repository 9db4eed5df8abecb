#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "irisdilate/errors.hpp"
#include "irisdilate/geometry.hpp"
#include "irisdilate/image.hpp"
#include "irisdilate/sampling.hpp"

namespace irisdilate {

struct RemapResult {
  PixelGrid image;
  IrisGeometry geometry;  // target geometry
  DilationLevel lambda;   // achieved dilation level
};

/// Source-image position sampled for target pixel (x, y). The angle about the
/// center is preserved, so the polar round trip reduces to rescaling the
/// center offset by r / r'.
inline CartesianPoint source_coordinate(double x, double y, double center_x, double center_y,
                                        const RadialMapParams& params) noexcept {
  const double dx = x - center_x;
  const double dy = y - center_y;
  const double r_prime = std::sqrt(dx * dx + dy * dy);
  if (r_prime >= params.r3()) return {x, y};
  if (r_prime == 0.0) return {center_x, center_y};
  const double scale = radial_map_inverse_unchecked(r_prime, params) / r_prime;
  return {center_x + scale * dx, center_y + scale * dy};
}

/// Throws GeometryError unless the circle center lies inside the frame.
inline void require_center_inside(const PixelGrid& image, const IrisGeometry& g) {
  if (g.center_x < 0.0 || g.center_x > image.width() - 1 || g.center_y < 0.0 ||
      g.center_y > image.height() - 1) {
    throw GeometryError("iris center lies outside the image frame");
  }
}

namespace detail {

inline void remap_rows(const PixelGrid& src, PixelGrid& dst, const IrisGeometry& g,
                       const RadialMapParams& params, SamplingMethod method, int row_begin,
                       int row_end) noexcept {
  const int width = src.width();
  const std::size_t channels = static_cast<std::size_t>(src.channels());
  const double r3 = params.r3();
  for (int y = row_begin; y < row_end; ++y) {
    const double dy = y - g.center_y;
    auto out_row = dst.row(y);
    auto in_row = src.row(y);
    // Every pixel of this row is at least |dy| from the center.
    if (std::abs(dy) >= r3) {
      std::copy(in_row.begin(), in_row.end(), out_row.begin());
      continue;
    }
    for (int x = 0; x < width; ++x) {
      const double dx = x - g.center_x;
      const double r_prime = std::sqrt(dx * dx + dy * dy);
      std::uint8_t* out = out_row.data() + static_cast<std::size_t>(x) * channels;
      if (r_prime >= r3) {
        std::copy_n(in_row.data() + static_cast<std::size_t>(x) * channels, channels, out);
        continue;
      }
      double sx = g.center_x;
      double sy = g.center_y;
      if (r_prime > 0.0) {
        const double scale = radial_map_inverse_unchecked(r_prime, params) / r_prime;
        sx += scale * dx;
        sy += scale * dy;
      }
      sample_into(src, sx, sy, method, out);
    }
  }
}

}  // namespace detail

/// Re-renders `image` (localized by `source`) as it would appear with pupil
/// radius `target.r_pupil`. Both geometries must share center and iris radius.
/// Rows are split across `workers` threads; output bytes do not depend on the
/// worker count.
inline PixelGrid remap_between(const PixelGrid& image, const IrisGeometry& source,
                               const IrisGeometry& target, SamplingMethod method,
                               int workers = 1) {
  if (image.empty()) throw DomainError("cannot remap an empty grid");
  require_legal(image, method);
  const RadialMapParams params = make_radial_params(source, target);
  require_center_inside(image, source);
  if (workers < 1) throw DomainError("worker count must be at least 1");

  PixelGrid out(image.width(), image.height(), image.channels(), image.semantics());
  const int height = image.height();
  const int n = std::min(workers, height);
  if (n == 1) {
    detail::remap_rows(image, out, source, params, method, 0, height);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int begin = static_cast<int>(static_cast<long long>(height) * i / n);
    const int end = static_cast<int>(static_cast<long long>(height) * (i + 1) / n);
    pool.emplace_back([&, begin, end] {
      detail::remap_rows(image, out, source, params, method, begin, end);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

inline RemapResult remap_dilation(const PixelGrid& image, const IrisGeometry& g,
                                  DilationLevel lambda_target, SamplingMethod method,
                                  int workers = 1) {
  validate(g);
  const IrisGeometry target = target_geometry(g, lambda_target);
  PixelGrid out = remap_between(image, g, target, method, workers);
  return {std::move(out), target, lambda_target};
}

/// Nearest-neighbour remap of a label mask; never introduces new class ids.
inline RemapResult remap_mask(const PixelGrid& mask, const IrisGeometry& g,
                              DilationLevel lambda_target, int workers = 1) {
  if (mask.semantics() != Semantics::Label) {
    throw SemanticsError("remap_mask requires a label grid");
  }
  return remap_dilation(mask, g, lambda_target, SamplingMethod::Nearest, workers);
}

}  // namespace irisdilate
