#pragma once

#include <stdexcept>
#include <string>

namespace eguard {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidVertexError : public Error {
 public:
  using Error::Error;
};

class InvalidEdgeError : public Error {
 public:
  using Error::Error;
};

class EmptyGraphError : public Error {
 public:
  using Error::Error;
};

class InvalidRangeError : public Error {
 public:
  using Error::Error;
};

class WrongGraphError : public Error {
 public:
  using Error::Error;
};

class NoGuardsError : public Error {
 public:
  using Error::Error;
};

class InvalidFleetError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

class NoSamplesError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file; message carries "<source>:<line>: <what>".
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what) {}
};

}  // namespace eguard
