#pragma once

#include <stdexcept>

namespace ess {

// Base class of every error thrown by the library.
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Invalid numeric input: negative weight, non-positive order, bad parameter.
class domain_error : public error {
  public:
    using error::error;
};

// Probabilities that do not sum to 1 within tolerance.
class normalization_error : public error {
  public:
    using error::error;
};

// Conditioning on an event of probability zero.
class conditioning_error : public error {
  public:
    using error::error;
};

// Malformed textual input.
class parse_error : public error {
  public:
    using error::error;
};

// Numerical integration failed to converge within the refinement cap.
class quadrature_error : public error {
  public:
    using error::error;
};

// Closed-form evaluation requested for a density family that has none.
class unsupported_family : public error {
  public:
    using error::error;
};

}  // namespace ess
