#pragma once

#include <stdexcept>
#include <string>

namespace hdet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed exact-number text or tensor document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operation requires boundary format (k_0 = k_1 + ... + k_p) and did not get it.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Sizes that must agree do not (entry counts, shared axes, vector lengths).
class ShapeError : public Error {
 public:
  using Error::Error;
};

}  // namespace hdet
