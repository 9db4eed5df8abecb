#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>

#include "irisdilate/errors.hpp"
#include "irisdilate/image.hpp"

namespace irisdilate {

struct IoUConfig {
  /// Added to the union count so the ratio stays defined for empty masks.
  double epsilon = 1e-6;
};

namespace detail {

inline void require_same_label_shape(const PixelGrid& a, const PixelGrid& b) {
  if (a.semantics() != Semantics::Label || b.semantics() != Semantics::Label) {
    throw SemanticsError("IoU requires label masks");
  }
  if (!a.same_shape(b)) throw DomainError("mask dimensions differ");
}

inline void require_epsilon(const IoUConfig& cfg) {
  if (!(cfg.epsilon > 0.0)) throw DomainError("IoU epsilon must be positive");
}

template <typename Pred>
double counted_iou(const PixelGrid& a, const PixelGrid& b, const IoUConfig& cfg, Pred member) {
  const auto da = a.data();
  const auto db = b.data();
  std::uint64_t inter = 0;
  std::uint64_t uni = 0;
  for (std::size_t i = 0; i < da.size(); ++i) {
    const bool in_a = member(da[i]);
    const bool in_b = member(db[i]);
    inter += static_cast<std::uint64_t>(in_a && in_b);
    uni += static_cast<std::uint64_t>(in_a || in_b);
  }
  return static_cast<double>(inter) / (static_cast<double>(uni) + cfg.epsilon);
}

}  // namespace detail

/// Bitwise intersection over union of two binary {0,1} masks.
inline double iou(const PixelGrid& mask_a, const PixelGrid& mask_b, const IoUConfig& cfg = {}) {
  detail::require_same_label_shape(mask_a, mask_b);
  detail::require_epsilon(cfg);
  if (!is_binary_mask(mask_a) || !is_binary_mask(mask_b)) {
    throw SemanticsError("IoU requires binary masks with values in {0, 1}");
  }
  return detail::counted_iou(mask_a, mask_b, cfg, [](std::uint8_t v) { return v != 0; });
}

/// IoU of the planes where each mask equals `class_id`. A class absent from
/// both masks scores 0.
inline double per_class_iou(const PixelGrid& mask_a, const PixelGrid& mask_b,
                            std::uint8_t class_id, const IoUConfig& cfg = {}) {
  detail::require_same_label_shape(mask_a, mask_b);
  detail::require_epsilon(cfg);
  return detail::counted_iou(mask_a, mask_b, cfg,
                             [class_id](std::uint8_t v) { return v == class_id; });
}

/// Mean absolute sample difference, optionally restricted to pixels where
/// `region` is nonzero. Averages over every channel of the selected pixels.
inline double mean_abs_diff(const PixelGrid& a, const PixelGrid& b,
                            const PixelGrid* region = nullptr) {
  if (a.semantics() != Semantics::Intensity || b.semantics() != Semantics::Intensity) {
    throw SemanticsError("mean_abs_diff requires intensity grids");
  }
  if (!a.same_shape(b)) throw DomainError("grid dimensions differ");
  if (region != nullptr &&
      (region->width() != a.width() || region->height() != a.height() || region->channels() != 1)) {
    throw DomainError("region mask must be single-channel with the grids' width and height");
  }
  const int channels = a.channels();
  std::uint64_t total = 0;
  std::uint64_t count = 0;
  for (int y = 0; y < a.height(); ++y) {
    const auto ra = a.row(y);
    const auto rb = b.row(y);
    for (int x = 0; x < a.width(); ++x) {
      if (region != nullptr && region->at(x, y) == 0) continue;
      for (int c = 0; c < channels; ++c) {
        const std::size_t i = static_cast<std::size_t>(x * channels + c);
        total += static_cast<std::uint64_t>(std::abs(int{ra[i]} - int{rb[i]}));
      }
      count += static_cast<std::uint64_t>(channels);
    }
  }
  if (count == 0) throw DomainError("mean_abs_diff region selects no pixels");
  return static_cast<double>(total) / static_cast<double>(count);
}

}  // namespace irisdilate
