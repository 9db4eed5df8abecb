#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "irisdilate/errors.hpp"
#include "irisdilate/image.hpp"

namespace irisdilate {

enum class SamplingMethod { Nearest, Bilinear };

inline const char* to_string(SamplingMethod m) {
  return m == SamplingMethod::Bilinear ? "bilinear" : "nearest";
}

inline std::optional<SamplingMethod> parse_sampling_method(std::string_view name) {
  if (name == "nearest") return SamplingMethod::Nearest;
  if (name == "bilinear") return SamplingMethod::Bilinear;
  return std::nullopt;
}

/// Label grids may only be sampled with Nearest.
inline void require_legal(const PixelGrid& grid, SamplingMethod method) {
  if (grid.semantics() == Semantics::Label && method != SamplingMethod::Nearest) {
    throw SemanticsError("label grids can only be resampled with nearest-neighbour sampling");
  }
}

namespace detail {

inline double clamp_coord(double v, int size) noexcept {
  return std::clamp(v, 0.0, static_cast<double>(size - 1));
}

// Coordinates must not be NaN.
inline void sample_nearest_into(const PixelGrid& grid, double x, double y,
                                std::uint8_t* out) noexcept {
  const int xi = static_cast<int>(std::floor(clamp_coord(x, grid.width()) + 0.5));
  const int yi = static_cast<int>(std::floor(clamp_coord(y, grid.height()) + 0.5));
  const std::uint8_t* src = grid.data().data() + grid.index(xi, yi);
  std::copy_n(src, grid.channels(), out);
}

inline void sample_bilinear_into(const PixelGrid& grid, double x, double y,
                                 std::uint8_t* out) noexcept {
  const double cx = clamp_coord(x, grid.width());
  const double cy = clamp_coord(y, grid.height());
  const int x0 = static_cast<int>(std::floor(cx));
  const int y0 = static_cast<int>(std::floor(cy));
  const int x1 = std::min(x0 + 1, grid.width() - 1);
  const int y1 = std::min(y0 + 1, grid.height() - 1);
  const double fx = cx - x0;
  const double fy = cy - y0;
  const std::uint8_t* base = grid.data().data();
  const std::uint8_t* p00 = base + grid.index(x0, y0);
  const std::uint8_t* p10 = base + grid.index(x1, y0);
  const std::uint8_t* p01 = base + grid.index(x0, y1);
  const std::uint8_t* p11 = base + grid.index(x1, y1);
  for (int c = 0; c < grid.channels(); ++c) {
    const double top = (1.0 - fx) * p00[c] + fx * p10[c];
    const double bottom = (1.0 - fx) * p01[c] + fx * p11[c];
    const double v = (1.0 - fy) * top + fy * bottom;
    out[c] = static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
  }
}

inline void sample_into(const PixelGrid& grid, double x, double y, SamplingMethod method,
                        std::uint8_t* out) noexcept {
  if (method == SamplingMethod::Nearest) {
    sample_nearest_into(grid, x, y, out);
  } else {
    sample_bilinear_into(grid, x, y, out);
  }
}

}  // namespace detail

/// Samples all channels of `grid` at real coordinates (x, y). Coordinates
/// outside the frame are clamped to the border.
inline std::vector<std::uint8_t> sample(const PixelGrid& grid, double x, double y,
                                        SamplingMethod method) {
  if (std::isnan(x) || std::isnan(y)) throw DomainError("sample coordinates must not be NaN");
  if (grid.empty()) throw DomainError("cannot sample an empty grid");
  require_legal(grid, method);
  std::vector<std::uint8_t> out(static_cast<std::size_t>(grid.channels()));
  detail::sample_into(grid, x, y, method, out.data());
  return out;
}

}  // namespace irisdilate
