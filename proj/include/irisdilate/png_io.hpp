#pragma once

#include <png.h>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "irisdilate/errors.hpp"
#include "irisdilate/image.hpp"

namespace irisdilate {

namespace detail {

inline int png_format_channels(png_uint_32 format) {
  return static_cast<int>(PNG_IMAGE_SAMPLE_CHANNELS(format));
}

inline std::optional<png_uint_32> png_format_for_channels(int channels) {
  switch (channels) {
    case 1: return PNG_FORMAT_GRAY;
    case 2: return PNG_FORMAT_GA;
    case 3: return PNG_FORMAT_RGB;
    case 4: return PNG_FORMAT_RGBA;
    default: return std::nullopt;
  }
}

struct PngImageGuard {
  png_image image{};
  PngImageGuard() { image.version = PNG_IMAGE_VERSION; }
  ~PngImageGuard() { png_image_free(&image); }
  PngImageGuard(const PngImageGuard&) = delete;
  PngImageGuard& operator=(const PngImageGuard&) = delete;
};

}  // namespace detail

/// Reads an 8-bit PNG. Gray and RGB files (with or without alpha) keep their
/// channel count; palette files expand to RGB. Label grids must be gray
/// id-planes.
inline PixelGrid load_image(const std::filesystem::path& path,
                            Semantics semantics = Semantics::Intensity) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw IoError("cannot open image '" + path.string() + "': no such file");
  }

  detail::PngImageGuard guard;
  png_image& img = guard.image;
  if (png_image_begin_read_from_file(&img, path.c_str()) == 0) {
    throw FormatError("'" + path.string() + "' is not a readable PNG: " + img.message);
  }
  if (img.width == 0 || img.height == 0) {
    throw FormatError("'" + path.string() + "' has zero dimensions");
  }

  png_uint_32 format = img.format & (PNG_FORMAT_FLAG_COLOR | PNG_FORMAT_FLAG_ALPHA);
  img.format = format;
  const int channels = detail::png_format_channels(format);
  if (semantics == Semantics::Label && channels != 1) {
    throw FormatError("label mask '" + path.string() + "' must be a single-channel id-plane");
  }

  const int width = static_cast<int>(img.width);
  const int height = static_cast<int>(img.height);
  std::vector<std::uint8_t> data(PNG_IMAGE_SIZE(img));
  if (png_image_finish_read(&img, nullptr, data.data(), 0, nullptr) == 0) {
    throw FormatError("failed to decode '" + path.string() + "': " + img.message);
  }
  return PixelGrid(width, height, channels, semantics, std::move(data));
}

/// Writes a lossless 8-bit PNG. Grids with more than four channels cannot be
/// stored; label masks are persisted as a single id-plane.
inline void save_image(const PixelGrid& grid, const std::filesystem::path& path) {
  if (grid.empty()) throw DomainError("cannot save an empty grid");
  const auto format = detail::png_format_for_channels(grid.channels());
  if (!format) {
    throw FormatError("PNG output supports 1-4 channels, grid has " +
                      std::to_string(grid.channels()));
  }

  detail::PngImageGuard guard;
  png_image& img = guard.image;
  img.width = static_cast<png_uint_32>(grid.width());
  img.height = static_cast<png_uint_32>(grid.height());
  img.format = *format;
  if (png_image_write_to_file(&img, path.c_str(), 0, grid.data().data(),
                              static_cast<png_int_32>(grid.row_stride()), nullptr) == 0) {
    throw IoError("cannot write '" + path.string() + "': " + img.message);
  }
}

}  // namespace irisdilate
