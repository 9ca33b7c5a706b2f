#pragma once

#include <stdexcept>
#include <string>

namespace ghsurf {

/// Bad input: a precondition on user-supplied data was violated.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Internal consistency failure, e.g. a Galois-stable sum that did not
/// reduce to a rational number. Never caused by user input alone.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ghsurf
