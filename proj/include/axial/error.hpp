#pragma once

#include <stdexcept>
#include <string>

namespace axial {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class FieldMismatch : public Error {
public:
  using Error::Error;
};

class InvalidParameter : public Error {
public:
  using Error::Error;
};

/// A subspace that was claimed to be an ideal is not closed under products.
class ClosureViolation : public Error {
public:
  using Error::Error;
};

class PreconditionError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class BoundExceeded : public Error {
public:
  using Error::Error;
};

} // namespace axial
