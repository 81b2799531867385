#ifndef INVOP_ERRORS_HH
#define INVOP_ERRORS_HH

#include <stdexcept>
#include <string>

namespace invop {

// Bad input: malformed text, mismatched dimensions, violated preconditions.
// The CLI maps this to exit code 2.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Valid input for which a mathematical check failed (a custom delta that is
// not a one-dimensional-quotient invariant, a non-radial operator, ...).
// The CLI maps this to a failed report entry and exit code 1.
struct check_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace invop

#endif
