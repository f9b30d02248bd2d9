#ifndef CANTORVAL_ERRORS_HPP
#define CANTORVAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cantorval {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (a rational string, a spec entry, a code digit).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was asked for outside the hypotheses it is defined under.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A geometric tail whose ratio is not below one; nothing can be certified.
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Exact enumeration would exceed the configured number of parts.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace cantorval

#endif  // CANTORVAL_ERRORS_HPP
