#pragma once

#include <stdexcept>
#include <string>

namespace kinetic {

// Invalid input: bad grid sizes, malformed configuration, wrong argument
// combinations. Maps to CLI exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The numerics failed: non-finite values, singular constraint systems,
// symmetry violations. Maps to CLI exit code 2.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kinetic
