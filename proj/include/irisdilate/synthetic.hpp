#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "irisdilate/geometry.hpp"
#include "irisdilate/image.hpp"

namespace irisdilate {

// Analytic test scenes. They stand in for real captures in the benchmark and
// the test suites, where ground truth must be known in closed form.

namespace detail {

inline std::uint8_t to_u8(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
}

}  // namespace detail

/// Iris texture value at normalized radius rho in [0, 1] and angle theta.
/// Smooth enough that resampling at different dilations stays comparable.
inline double iris_texture(double rho, double theta) {
  return 128.0 + 45.0 * std::sin(6.0 * theta) * std::cos(std::numbers::pi * rho) +
         30.0 * std::cos(3.0 * theta + 2.0 * std::numbers::pi * rho);
}

/// Dark pupil, textured iris, bright sclera/skin. Extra channels are the first
/// channel scaled so that RGB scenes stay distinct per channel.
inline PixelGrid make_synthetic_eye(int width, int height, const IrisGeometry& g,
                                    int channels = 1) {
  validate(g);
  PixelGrid out(width, height, channels, Semantics::Intensity);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double dx = x - g.center_x;
      const double dy = y - g.center_y;
      const double r = std::sqrt(dx * dx + dy * dy);
      double v;
      if (r < g.r_pupil) {
        v = 20.0 + 5.0 * (r / g.r_pupil);
      } else if (r < g.r_iris) {
        double theta = std::atan2(dy, dx);
        if (theta < 0.0) theta += 2.0 * std::numbers::pi;
        v = iris_texture((r - g.r_pupil) / (g.r_iris - g.r_pupil), theta);
      } else {
        v = 200.0 - 0.1 * (r - g.r_iris) + 10.0 * std::sin(0.05 * x + 0.03 * y);
      }
      for (int c = 0; c < channels; ++c) {
        out.at(x, y, c) = detail::to_u8(v * (1.0 - 0.15 * c));
      }
    }
  }
  return out;
}

/// Binary label mask: 1 where r_pupil <= r < r_iris, else 0.
inline PixelGrid make_annulus_mask(int width, int height, const IrisGeometry& g) {
  validate(g);
  PixelGrid out(width, height, 1, Semantics::Label);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double r = std::hypot(x - g.center_x, y - g.center_y);
      out.at(x, y) = (r >= g.r_pupil && r < g.r_iris) ? 1 : 0;
    }
  }
  return out;
}

/// Four-class eye parsing mask: 0 background, 1 sclera band, 2 iris, 3 pupil.
inline PixelGrid make_four_class_mask(int width, int height, const IrisGeometry& g) {
  validate(g);
  PixelGrid out(width, height, 1, Semantics::Label);
  const double sclera = g.r_iris * 1.6;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double r = std::hypot(x - g.center_x, y - g.center_y);
      std::uint8_t id = 0;
      if (r < g.r_pupil) {
        id = 3;
      } else if (r < g.r_iris) {
        id = 2;
      } else if (r < sclera && std::abs(y - g.center_y) < 0.5 * g.r_iris) {
        id = 1;
      }
      out.at(x, y) = id;
    }
  }
  return out;
}

}  // namespace irisdilate
