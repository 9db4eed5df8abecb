#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>

#include "irisdilate/errors.hpp"
#include "irisdilate/geometry.hpp"

namespace irisdilate {

// Geometry sidecar: one `key=value` per line with keys cx, cy, r_pupil,
// r_iris and lambda. Blank lines and `#` comments are ignored on read.

struct GeometrySidecar {
  IrisGeometry geometry;
  std::optional<double> lambda;
};

namespace detail {

inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline std::optional<double> parse_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace detail

inline std::string format_sidecar(const IrisGeometry& g, double lambda) {
  std::string out;
  out += "cx=" + detail::format_double(g.center_x) + "\n";
  out += "cy=" + detail::format_double(g.center_y) + "\n";
  out += "r_pupil=" + detail::format_double(g.r_pupil) + "\n";
  out += "r_iris=" + detail::format_double(g.r_iris) + "\n";
  out += "lambda=" + detail::format_double(lambda) + "\n";
  return out;
}

inline void write_sidecar(const std::filesystem::path& path, const IrisGeometry& g,
                          double lambda) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot write sidecar '" + path.string() + "'");
  os << format_sidecar(g, lambda);
  if (!os) throw IoError("failed writing sidecar '" + path.string() + "'");
}

inline GeometrySidecar parse_sidecar(std::string_view text) {
  std::map<std::string, double, std::less<>> values;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = detail::trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw FormatError("sidecar line " + std::to_string(line_no) + ": expected key=value");
    }
    const auto key = detail::trim(line.substr(0, eq));
    const auto value = detail::parse_double(line.substr(eq + 1));
    if (!value) {
      throw FormatError("sidecar line " + std::to_string(line_no) + ": bad number for '" +
                        std::string(key) + "'");
    }
    values[std::string(key)] = *value;
  }
  const auto need = [&](std::string_view key) {
    const auto it = values.find(key);
    if (it == values.end()) throw FormatError("sidecar is missing '" + std::string(key) + "'");
    return it->second;
  };
  GeometrySidecar out;
  out.geometry = {need("cx"), need("cy"), need("r_pupil"), need("r_iris")};
  if (const auto it = values.find("lambda"); it != values.end()) out.lambda = it->second;
  return out;
}

inline GeometrySidecar read_sidecar(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open sidecar '" + path.string() + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse_sidecar(ss.str());
}

}  // namespace irisdilate
