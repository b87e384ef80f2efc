#pragma once

#include <stdexcept>
#include <string>

namespace gsbench {

/// Base class for every error the library raises. The CLI maps the concrete
/// subclasses onto process exit codes.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed pattern text or config document.
class ParseError : public Error {
public:
  using Error::Error;
};

/// A generator parameter that is out of range or overflows 64-bit counts.
class RangeError : public Error {
public:
  using Error::Error;
};

/// A RunConfig or batch that cannot be planned or executed.
class ConfigError : public Error {
public:
  using Error::Error;
};

/// Bad input to a statistic (empty list, non-positive value, zero variance).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Bad command-line usage.
class UsageError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

} // namespace gsbench
