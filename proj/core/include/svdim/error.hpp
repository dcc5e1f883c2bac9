#pragma once

#include <stdexcept>

namespace svdim {

/// Raised for out-of-domain user parameters (bad n, m, d, s, modulus, grids).
/// The CLI maps this to exit status 2.
class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal invariant is broken (e.g. a rank exceeding its
/// closed-form upper bound). Never expected on well-formed input.
class KernelError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace svdim
