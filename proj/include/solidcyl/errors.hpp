#pragma once

#include <stdexcept>
#include <string>

namespace solidcyl
{
// Argument outside an operation's accepted domain (e.g. m = 1.5).
class ArgumentError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

// Geometry for which a formula's derivation does not hold (e.g. d < r for
// the lateral-surface term).
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

// The requested quantity is infinite, e.g. K(1).
class DivergentError : public DomainError
{
  public:
    using DomainError::DomainError;
};
}  // namespace solidcyl
