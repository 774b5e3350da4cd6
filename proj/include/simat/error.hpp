#pragma once

#include <stdexcept>
#include <string>

namespace simat {

/// Base class for all library errors. CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DomainMismatch : public Error {
 public:
  using Error::Error;
};

/// A UnitRationals result left [0,1].
class DomainOverflow : public Error {
 public:
  using Error::Error;
};

/// min/max requested on Z_n, which carries no order.
class UnorderedDomain : public Error {
 public:
  using Error::Error;
};

class InvalidEndpoint : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// Same dims but different cut sets (or different dims) where same type is required.
class TypeMismatch : public Error {
 public:
  using Error::Error;
};

/// Flat dimensions do not chain (cols(A) != rows(B)).
class NotConformable : public Error {
 public:
  using Error::Error;
};

/// Flat dims chain but block cuts do not (col_cuts(A) != row_cuts(B)).
class PartitionMismatch : public Error {
 public:
  using Error::Error;
};

class CarrierEmpty : public Error {
 public:
  using Error::Error;
};

class GeneratorOutsideCarrier : public Error {
 public:
  using Error::Error;
};

/// An exhaustive witness search covered the whole space and found nothing.
/// (A sampled search that finds nothing returns an empty list instead.)
class NoneFound : public Error {
 public:
  using Error::Error;
};

/// Closure / search did not finish within the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class MapUndefined : public Error {
 public:
  using Error::Error;
};

/// A fuzzification rule produced a value outside [0,1].
class ImageEscape : public Error {
 public:
  using Error::Error;
};

class ScalarOutOfRange : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace simat
