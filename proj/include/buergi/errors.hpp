#pragma once

#include <stdexcept>
#include <string>

namespace buergi {

// Base of every error the library raises. Callers that only care about
// "something was wrong with the request" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A positional digit outside 0..59.
class MalformedDigitError : public ParseError {
 public:
  using ParseError::ParseError;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidStateError : public Error {
 public:
  using Error::Error;
};

class ConfigurationError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class SeedAccuracyError : public Error {
 public:
  using Error::Error;
};

class GridError : public Error {
 public:
  using Error::Error;
};

}  // namespace buergi
