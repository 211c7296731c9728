#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regulus {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands carry different coefficient rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

// Division by a series whose constant term is not a unit of the ring.
class NonUnitConstant : public Error {
 public:
  using Error::Error;
};

// A coefficient was requested at or beyond the known precision, or a
// comparison reached past the shared precision of its operands.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("at byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace regulus
