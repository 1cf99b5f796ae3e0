#ifndef TORSIONLAB_ERRORS_HPP
#define TORSIONLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace torsionlab {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Shape mismatch: non-square determinant input, incompatible products, ...
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Structural precondition on a bilinear form failed (not skew, odd size, ...).
class FormError : public Error {
 public:
  using Error::Error;
};

// Singular matrix where an invertible one is required, or an inconsistent
// linear system.
class SingularError : public Error {
 public:
  using Error::Error;
};

// A pairing that must be nondegenerate turned out degenerate.
class NondegeneracyError : public Error {
 public:
  using Error::Error;
};

// Caller violated an operation contract (wrong basis sizes, reducible
// representation where an irreducible one is required, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

// Input outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (JSON payloads, scalar literals).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A chain complex whose boundary maps do not compose to zero.
class ComplexError : public Error {
 public:
  ComplexError(const std::string& msg, int degree) : Error(msg), degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

// Representation does not satisfy the surface relator.
class RelatorError : public Error {
 public:
  using Error::Error;
};

// Representation is reducible where irreducibility is required.
class ReducibleError : public Error {
 public:
  using Error::Error;
};

// Train-track cocycle violating a switch condition.
class SwitchConditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace torsionlab

#endif  // TORSIONLAB_ERRORS_HPP
