#pragma once

#include <stdexcept>
#include <string>

namespace mip {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: words, family specs, field literals, JSON files.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t position = npos)
      : Error(position == npos ? what : what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Arguments outside the documented domain of an operation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A construction produced something inconsistent with its declaration,
/// e.g. a presentation whose enumerated order differs from the expected one.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap fired. `cap()` names the cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string cap, const std::string& what)
      : Error(what), cap_(std::move(cap)) {}
  const std::string& cap() const { return cap_; }

 private:
  std::string cap_;
};

}  // namespace mip
