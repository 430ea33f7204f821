#pragma once

#include <stdexcept>
#include <string>

namespace socpref {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// -- construction errors ----------------------------------------------------

class EmptyVector : public Error {
 public:
  using Error::Error;
};

class NegativeWeight : public Error {
 public:
  using Error::Error;
};

class ZeroMass : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NonFiniteValue : public Error {
 public:
  using Error::Error;
};

class InvalidLabel : public Error {
 public:
  using Error::Error;
};

/// Bad parameter value outside a dedicated category (tolerances, counts, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// -- analysis errors ----------------------------------------------------------

class NonPositiveScale : public Error {
 public:
  using Error::Error;
};

/// The game utility handed to a decomposition does not behave as an
/// expected-utility functional within the configured probe budget.
class GameUtilityNotEU : public Error {
 public:
  using Error::Error;
};

// -- I/O and fixture errors ---------------------------------------------------

class ParseError : public Error {
 public:
  using Error::Error;
};

class FixtureAssertionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace socpref
