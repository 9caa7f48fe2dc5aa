#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace overcubic {

/// Base class of every error raised by the library. The CLI maps these to
/// exit code 2 (usage or input error).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary operation on series carrying different moduli.
class ModulusError : public Error {
 public:
  using Error::Error;
};

/// Division by a series (or scalar) whose constant term is not a unit.
class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

/// A comparison or extraction asked for more coefficients than are known.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside an operation's domain (non-prime p, bad selector, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed expression or claim text. `offset` is the byte offset of the
/// offending token in the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Evaluation failure of a well-formed expression (unbound parameter,
/// non-integral exponent, negative net q-shift, ...).
class EvalError : public Error {
 public:
  using Error::Error;
};

}  // namespace overcubic
