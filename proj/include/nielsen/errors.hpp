#pragma once

#include <stdexcept>
#include <string>

namespace nielsen {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad JSON, non-square matrix, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The (matrix, group) pair cannot come from a Jiang map with f_# = id:
/// |G| does not divide some L(f^k), or a graph Dold coefficient is not an
/// integer.
class ModelInconsistency : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of candidates before producing its witness.
class SearchCapExceeded : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured size cap.
class CapExceeded : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

}  // namespace nielsen
