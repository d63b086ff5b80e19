#pragma once

#include <stdexcept>
#include <string>

namespace laguerre {

/// Argument outside the mathematical domain of an operation (negative degree,
/// point off the closed orthant, dimension mismatch, invalid space parameters).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed coefficient, points or rule file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An integrand or field produced inf/nan at a quadrature node.
class NonFiniteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace laguerre
