#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace saferoute {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidCategory : public Error {
 public:
  using Error::Error;
};

/// Vector/scale/weight sizes disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A detour weight is below 1 or not finite.
class InvalidWeight : public Error {
 public:
  using Error::Error;
};

class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Structural violation: duplicate node id, dangling edge endpoint, bad edge geometry.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class EmptyGraph : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

/// A solve exceeded its time budget.
class Timeout : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t byte_offset)
      : Error(what + " (at byte " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace saferoute
