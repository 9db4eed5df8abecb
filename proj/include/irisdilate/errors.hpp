#pragma once

#include <stdexcept>
#include <string>

namespace irisdilate {

// Error taxonomy shared by the library, the CLI exit-code mapping and any
// host-language wrapper. Every error derives from Error so callers can catch
// the whole family in one place.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A value lies outside its mathematical domain (lambda not in (0,1), NaN
/// coordinates, negative radius, too-small sizes).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Circle parameters are inconsistent (radius order, non-finite, mismatched
/// centers, center outside the frame).
class GeometryError : public Error {
public:
  using Error::Error;
};

/// An operation is not legal for the grid's channel semantics.
class SemanticsError : public Error {
public:
  using Error::Error;
};

/// Malformed file content: truncated rasters, unparsable manifests/sidecars.
class FormatError : public Error {
public:
  using Error::Error;
};

/// Filesystem failures: missing inputs, unwritable outputs.
class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace irisdilate
