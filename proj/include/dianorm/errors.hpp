#pragma once

#include <stdexcept>
#include <string>

namespace dianorm {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands have incompatible or invalid shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An iterative routine failed to converge, or an input carries NaN/Inf.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Input is outside the operation's domain (e.g. a zero operator where a
// nonzero one is required).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// Matrix expected to be positive semidefinite has a significantly negative
// eigenvalue.
class NotPsdError : public Error {
 public:
  using Error::Error;
};

// Malformed input file contents.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Filesystem failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace dianorm
