#pragma once

#include <stdexcept>
#include <string>

namespace csa {

/// Malformed input: shape mismatch, bad index, unparsable literal or file.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition on the algebraic structure does not hold (for example a
/// construction that needs a center-symmetric algebra was handed one that
/// is not). The message names a violating basis tuple.
class Refusal : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace csa
