#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "irisdilate/errors.hpp"

namespace irisdilate {

/// Concentric pupil/iris circle model of one eye image, in pixel units.
/// The center is shared by both boundaries.
struct IrisGeometry {
  double center_x = 0.0;
  double center_y = 0.0;
  double r_pupil = 0.0;
  double r_iris = 0.0;

  friend bool operator==(const IrisGeometry&, const IrisGeometry&) = default;
};

/// Throws GeometryError unless 0 < r_pupil < r_iris and every field is finite.
inline void validate(const IrisGeometry& g) {
  if (!std::isfinite(g.center_x) || !std::isfinite(g.center_y) ||
      !std::isfinite(g.r_pupil) || !std::isfinite(g.r_iris)) {
    throw GeometryError("iris geometry has non-finite fields");
  }
  if (!(g.r_pupil > 0.0)) {
    throw GeometryError("pupil radius must be positive, got " + std::to_string(g.r_pupil));
  }
  if (!(g.r_pupil < g.r_iris)) {
    throw GeometryError("pupil radius " + std::to_string(g.r_pupil) +
                        " must be smaller than iris radius " + std::to_string(g.r_iris));
  }
}

/// Pupil-to-iris radius ratio, restricted to the open interval (0, 1).
class DilationLevel {
public:
  explicit DilationLevel(double lambda) : value_(lambda) {
    if (!(lambda > 0.0 && lambda < 1.0)) {
      throw DomainError("dilation level must lie in (0, 1), got " + std::to_string(lambda));
    }
  }

  double value() const noexcept { return value_; }

  friend bool operator==(DilationLevel, DilationLevel) = default;
  friend auto operator<=>(DilationLevel, DilationLevel) = default;

private:
  double value_;
};

inline DilationLevel dilation_level(const IrisGeometry& g) {
  validate(g);
  return DilationLevel(g.r_pupil / g.r_iris);
}

/// Same center and iris radius as `g`, pupil resized so that its dilation
/// level equals `target`.
inline IrisGeometry target_geometry(const IrisGeometry& g, DilationLevel target) {
  validate(g);
  IrisGeometry out = g;
  out.r_pupil = target.value() * g.r_iris;
  return out;
}

/// Parameters of the inverse radial map from a target image (pupil radius r2)
/// back to its source image (pupil radius r1), both sharing iris radius r3.
class RadialMapParams {
public:
  static RadialMapParams from_radii(double r1, double r2, double r3) {
    if (!std::isfinite(r1) || !std::isfinite(r2) || !std::isfinite(r3)) {
      throw GeometryError("radial map radii must be finite");
    }
    if (r1 < 0.0 || !(r2 > 0.0) || !(r3 > 0.0)) {
      throw GeometryError("radial map radii out of range (need r1 >= 0, r2 > 0, r3 > 0)");
    }
    if (!(r1 < r3) || !(r2 < r3)) {
      throw GeometryError("pupil radii must be smaller than the iris radius");
    }
    return RadialMapParams(r1, r2, r3);
  }

  double r1() const noexcept { return r1_; }
  double r2() const noexcept { return r2_; }
  double r3() const noexcept { return r3_; }
  double m() const noexcept { return m_; }
  /// Slope of the pupil branch, r1 / r2.
  double pupil_scale() const noexcept { return pupil_scale_; }

private:
  RadialMapParams(double r1, double r2, double r3)
      : r1_(r1), r2_(r2), r3_(r3), m_((r3 - r1) / (r3 - r2)), pupil_scale_(r1 / r2) {}

  double r1_;
  double r2_;
  double r3_;
  double m_;
  double pupil_scale_;
};

inline RadialMapParams make_radial_params(const IrisGeometry& src, const IrisGeometry& dst) {
  validate(src);
  validate(dst);
  if (src.center_x != dst.center_x || src.center_y != dst.center_y) {
    throw GeometryError("source and target geometries must share one center");
  }
  if (src.r_iris != dst.r_iris) {
    throw GeometryError("source and target geometries must share the iris radius");
  }
  return RadialMapParams::from_radii(src.r_pupil, dst.r_pupil, src.r_iris);
}

// Branch evaluation without argument checks, for the per-pixel hot loop.
// Intervals are half-open: [0, r2), [r2, r3), [r3, inf).
inline double radial_map_inverse_unchecked(double r_prime, const RadialMapParams& p) noexcept {
  if (r_prime < p.r2()) return p.pupil_scale() * r_prime;
  if (r_prime < p.r3()) return p.m() * (r_prime - p.r2()) + p.r1();
  return r_prime;
}

/// Radius in the source image whose content lands at radius `r_prime` of the
/// target image.
inline double radial_map_inverse(double r_prime, const RadialMapParams& p) {
  if (!(r_prime >= 0.0)) {
    throw DomainError("radius must be non-negative, got " + std::to_string(r_prime));
  }
  return radial_map_inverse_unchecked(r_prime, p);
}

struct CartesianPoint {
  double x = 0.0;
  double y = 0.0;
};

struct PolarPoint {
  double r = 0.0;
  double theta = 0.0;  // radians in [0, 2*pi)
};

inline PolarPoint to_polar(CartesianPoint pt) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double r = std::hypot(pt.x, pt.y);
  if (r == 0.0) return {0.0, 0.0};
  double theta = std::atan2(pt.y, pt.x);
  if (theta < 0.0) theta += two_pi;
  if (theta >= two_pi) theta = 0.0;
  return {r, theta};
}

inline CartesianPoint to_cartesian(PolarPoint pt) {
  return {pt.r * std::cos(pt.theta), pt.r * std::sin(pt.theta)};
}

}  // namespace irisdilate
