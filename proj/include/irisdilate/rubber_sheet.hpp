#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "irisdilate/errors.hpp"
#include "irisdilate/geometry.hpp"
#include "irisdilate/image.hpp"
#include "irisdilate/sampling.hpp"

namespace irisdilate {

/// Unwrapped iris annulus. Row 0 is the pupil boundary, the last row the iris
/// boundary; column j looks along theta = 2*pi*j / width.
class RubberSheet {
public:
  static constexpr int default_width = 512;
  static constexpr int default_height = 64;

  explicit RubberSheet(PixelGrid pixels) : pixels_(std::move(pixels)) {}

  int width() const noexcept { return pixels_.width(); }
  int height() const noexcept { return pixels_.height(); }
  int channels() const noexcept { return pixels_.channels(); }
  const PixelGrid& pixels() const noexcept { return pixels_; }
  std::uint8_t at(int angular, int radial, int c = 0) const noexcept {
    return pixels_.at(angular, radial, c);
  }

private:
  PixelGrid pixels_;
};

inline RubberSheet rubber_sheet(const PixelGrid& image, const IrisGeometry& g,
                                int out_w = RubberSheet::default_width,
                                int out_h = RubberSheet::default_height,
                                SamplingMethod method = SamplingMethod::Bilinear) {
  if (out_w < 2 || out_h < 2) throw DomainError("rubber sheet needs at least 2x2 samples");
  if (image.empty()) throw DomainError("cannot normalize an empty grid");
  validate(g);
  require_legal(image, method);

  PixelGrid out(out_w, out_h, image.channels(), image.semantics());
  const std::size_t channels = static_cast<std::size_t>(image.channels());
  std::vector<double> cos_theta(static_cast<std::size_t>(out_w));
  std::vector<double> sin_theta(static_cast<std::size_t>(out_w));
  for (int j = 0; j < out_w; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / out_w;
    cos_theta[static_cast<std::size_t>(j)] = std::cos(theta);
    sin_theta[static_cast<std::size_t>(j)] = std::sin(theta);
  }
  for (int i = 0; i < out_h; ++i) {
    const double rho = static_cast<double>(i) / (out_h - 1);
    const double r = g.r_pupil + rho * (g.r_iris - g.r_pupil);
    auto row = out.row(i);
    for (int j = 0; j < out_w; ++j) {
      const double x = g.center_x + r * cos_theta[static_cast<std::size_t>(j)];
      const double y = g.center_y + r * sin_theta[static_cast<std::size_t>(j)];
      detail::sample_into(image, x, y, method, row.data() + static_cast<std::size_t>(j) * channels);
    }
  }
  return RubberSheet(std::move(out));
}

}  // namespace irisdilate
