#pragma once

#include <stdexcept>
#include <string>

namespace stlie {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two containers built over different base fields were combined.
struct FieldMismatchError : Error {
  using Error::Error;
};

// Structure tensor fails associativity or the unit law.
struct InvalidAlgebraError : Error {
  using Error::Error;
};

// m+n below the supported minimum for sl(m,n,R).
struct UnsupportedRankError : Error {
  using Error::Error;
};

// A candidate 2-cocycle failed the super-Jacobi sweep on the extension.
struct CocycleViolationError : Error {
  using Error::Error;
};

// A constructed bracket tensor violated an invariant it was built to satisfy.
struct InconsistentAlgebraError : Error {
  using Error::Error;
};

// Requested computation exceeds the configured size budget.
struct ResourceError : Error {
  using Error::Error;
};

// Malformed algebra spec file.
struct SpecParseError : Error {
  using Error::Error;
};

}  // namespace stlie
