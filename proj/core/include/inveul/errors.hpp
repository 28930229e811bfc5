#pragma once

#include <stdexcept>
#include <string>

namespace inveul {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An even-size-only family was asked for a row at an odd index. Callers that
// want the (all-zero) odd rows of the fixed-point-free family must request
// them explicitly, e.g. via zero_fixed_point_free_row().
struct OddIndex : Error {
  using Error::Error;
};

// The right-hand side of a recurrence was not an exact multiple of its left
// factor, or an alternating-sum weight failed to combine to an integer. The
// algebra guarantees exactness, so this always signals a bug (or corrupted
// input data), never a property of the mathematics.
struct DivisibilityViolation : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

// gamma_expand was handed a row that is not symmetric; there is no canonical
// gamma expansion for such rows and the library refuses to guess one.
struct NonSymmetricInput : Error {
  using Error::Error;
};

// An enumeration was requested above the configured feasibility ceiling.
struct FeasibilityExceeded : Error {
  using Error::Error;
};

// A persisted row cache failed re-validation on load.
struct CacheCorrupt : Error {
  using Error::Error;
};

}  // namespace inveul
