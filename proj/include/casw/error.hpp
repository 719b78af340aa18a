#ifndef CASW_ERROR_HPP
#define CASW_ERROR_HPP

#include <stdexcept>
#include <string>

namespace casw {

// Exit-code contract for the CLI: verification failures map to 1,
// malformed input to 2, capacity limits to 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedError : Error {
    using Error::Error;
};

struct CapacityError : Error {
    using Error::Error;
};

// A mathematical check failed on otherwise well-formed input (nonzero
// residual, mismatch between two computation routes, non-invertible
// element where a unit is required).
struct VerifyError : Error {
    using Error::Error;
};

// A theory-guaranteed invariant failed mid-algorithm; indicates input
// corruption or an implementation defect, never a user error.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace casw

#endif
