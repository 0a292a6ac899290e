#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bonded {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown for malformed text input. `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A letter or operation not legal for the word's flavor or strand count.
class FlavorError : public Error {
 public:
  using Error::Error;
};

/// A generator index outside 1..n-1.
class RangeError : public Error {
 public:
  using Error::Error;
};

class MoveError : public Error {
 public:
  using Error::Error;
};

}  // namespace bonded
