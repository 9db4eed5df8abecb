#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "irisdilate/errors.hpp"

namespace irisdilate {

/// What the samples of a grid mean. Label grids hold class ids and may only be
/// resampled with nearest-neighbour lookups.
enum class Semantics { Intensity, Label };

inline const char* to_string(Semantics s) {
  return s == Semantics::Label ? "label" : "intensity";
}

/// Row-major, channel-interleaved 8-bit raster. Pixel (col, row) sits at real
/// coordinates (col, row).
class PixelGrid {
public:
  PixelGrid() = default;

  PixelGrid(int width, int height, int channels, Semantics semantics = Semantics::Intensity)
      : PixelGrid(width, height, channels, semantics,
                  std::vector<std::uint8_t>(checked_size(width, height, channels), 0)) {}

  PixelGrid(int width, int height, int channels, Semantics semantics,
            std::vector<std::uint8_t> data)
      : width_(width), height_(height), channels_(channels), semantics_(semantics),
        data_(std::move(data)) {
    if (data_.size() != checked_size(width, height, channels)) {
      throw DomainError("pixel buffer holds " + std::to_string(data_.size()) +
                        " samples, expected width*height*channels");
    }
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int channels() const noexcept { return channels_; }
  Semantics semantics() const noexcept { return semantics_; }
  bool empty() const noexcept { return data_.empty(); }

  std::size_t row_stride() const noexcept {
    return static_cast<std::size_t>(width_) * static_cast<std::size_t>(channels_);
  }

  std::span<const std::uint8_t> data() const noexcept { return data_; }
  std::span<std::uint8_t> data() noexcept { return data_; }

  std::span<const std::uint8_t> row(int y) const noexcept {
    return std::span<const std::uint8_t>(data_).subspan(static_cast<std::size_t>(y) * row_stride(),
                                                        row_stride());
  }
  std::span<std::uint8_t> row(int y) noexcept {
    return std::span<std::uint8_t>(data_).subspan(static_cast<std::size_t>(y) * row_stride(),
                                                  row_stride());
  }

  std::uint8_t at(int x, int y, int c = 0) const noexcept { return data_[index(x, y, c)]; }
  std::uint8_t& at(int x, int y, int c = 0) noexcept { return data_[index(x, y, c)]; }

  std::size_t index(int x, int y, int c = 0) const noexcept {
    return (static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
            static_cast<std::size_t>(x)) *
               static_cast<std::size_t>(channels_) +
           static_cast<std::size_t>(c);
  }

  bool same_shape(const PixelGrid& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_ && channels_ == other.channels_;
  }

  /// Same pixels, relabelled semantics.
  PixelGrid with_semantics(Semantics s) const& {
    PixelGrid out = *this;
    out.semantics_ = s;
    return out;
  }
  PixelGrid with_semantics(Semantics s) && {
    semantics_ = s;
    return std::move(*this);
  }

  friend bool operator==(const PixelGrid&, const PixelGrid&) = default;

private:
  static std::size_t checked_size(int width, int height, int channels) {
    if (width <= 0 || height <= 0 || channels <= 0) {
      throw DomainError("grid dimensions must be positive (got " + std::to_string(width) + "x" +
                        std::to_string(height) + "x" + std::to_string(channels) + ")");
    }
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height) *
           static_cast<std::size_t>(channels);
  }

  int width_ = 0;
  int height_ = 0;
  int channels_ = 0;
  Semantics semantics_ = Semantics::Intensity;
  std::vector<std::uint8_t> data_;
};

/// Sorted distinct class ids of a label grid.
using LabelSet = std::vector<std::uint8_t>;

inline LabelSet label_set(const PixelGrid& grid) {
  if (grid.semantics() != Semantics::Label) {
    throw SemanticsError("label_set requires a label grid");
  }
  std::array<bool, 256> seen{};
  for (std::uint8_t v : grid.data()) seen[v] = true;
  LabelSet out;
  for (int v = 0; v < 256; ++v) {
    if (seen[static_cast<std::size_t>(v)]) out.push_back(static_cast<std::uint8_t>(v));
  }
  return out;
}

inline bool is_binary_mask(const PixelGrid& grid) {
  return std::all_of(grid.data().begin(), grid.data().end(),
                     [](std::uint8_t v) { return v <= 1; });
}

}  // namespace irisdilate
