#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "irisdilate/errors.hpp"
#include "irisdilate/geometry.hpp"
#include "irisdilate/image.hpp"
#include "irisdilate/remap.hpp"

namespace irisdilate {

/// Places equally shaped grids side by side, left to right.
inline PixelGrid hconcat(std::span<const PixelGrid> panels) {
  if (panels.empty()) throw DomainError("nothing to concatenate");
  const PixelGrid& first = panels.front();
  for (const auto& p : panels) {
    if (!p.same_shape(first)) throw DomainError("preview panels must share one shape");
  }
  const int n = static_cast<int>(panels.size());
  PixelGrid out(first.width() * n, first.height(), first.channels(), first.semantics());
  for (int y = 0; y < first.height(); ++y) {
    auto dst = out.row(y).begin();
    for (const auto& p : panels) dst = std::copy(p.row(y).begin(), p.row(y).end(), dst);
  }
  return out;
}

/// The input followed by one panel per requested dilation level.
inline PixelGrid make_preview_strip(const PixelGrid& image, const IrisGeometry& g,
                                    std::span<const DilationLevel> levels,
                                    SamplingMethod method) {
  std::vector<PixelGrid> panels;
  panels.reserve(levels.size() + 1);
  panels.push_back(image);
  for (const DilationLevel level : levels) {
    panels.push_back(remap_dilation(image, g, level, method).image);
  }
  return hconcat(panels);
}

}  // namespace irisdilate
