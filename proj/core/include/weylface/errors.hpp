#pragma once

#include <stdexcept>
#include <string>

namespace weylface {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Family parameters outside their admissible range (message names the bound).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Two vectors (or a vector and a root datum) disagree on length.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// An orbit or subgroup closure would grow past the configured cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// A descriptor violates one of its family's constraints (message names it).
class InvalidDescriptor : public Error {
 public:
  using Error::Error;
};

// Two independent constructions disagree. Either a bug or a real
// discrepancy in the closed forms; never silently corrected.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace weylface
