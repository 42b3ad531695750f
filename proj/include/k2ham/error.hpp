#pragma once

#include <stdexcept>
#include <string>

namespace k2ham {

/// Base of every error raised by the library.  The CLI maps the concrete
/// subclasses onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph6, sparse6, edge lists, embeddings, certificates).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called with arguments outside its contract.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Graph larger than the fixed vertex capacity.
class CapacityError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace k2ham
