#ifndef CFEM_ERROR_HPP
#define CFEM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cfem {

/// Bad input: malformed meshes, out-of-range indices, unsupported options.
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Base for failures that only show up once the numerics run.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// beta <= 0 or q < 0 was sampled at an assembly quadrature point.
class CoercivityError : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

class SingularSystemError : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

/// The posterior correction is only valid for constant beta and q == 0.
class ConstantCoefficientRequired : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

}  // namespace cfem

#endif
