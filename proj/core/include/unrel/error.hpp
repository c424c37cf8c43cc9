#pragma once

#include <stdexcept>
#include <string>

namespace unrel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The input graph is not connected where a connected graph is required.
class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

/// An exact computation was requested beyond its size guard.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// The sparsifier reparametrization 1 - q = (1 - p) / alpha has no solution in [0, 1].
class InfeasibleReparametrization : public Error {
 public:
  using Error::Error;
};

/// Malformed graph file or benchmark description.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Inputs are structurally inconsistent with each other (e.g. a contraction
/// map that does not belong to the graph).
class StructuralError : public Error {
 public:
  using Error::Error;
};

}  // namespace unrel
