#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsym {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument value (invalid n, malformed option, tampered index ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Operands built over different matrix sizes.
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

// Variable or family index outside its admissible range.
class IndexError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Requested size is outside the supported range of an operation (e.g. n < 4).
class Unsupported : public Error {
 public:
  using Error::Error;
};

// A range has no exact expansion in the given predicate family.
class NotRepresentable : public Error {
 public:
  using Error::Error;
};

}  // namespace qsym
