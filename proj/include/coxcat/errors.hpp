#pragma once

#include <stdexcept>

namespace coxcat {

/// Exact arithmetic failure (division by zero, malformed literal).
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid type specification (unknown family, bad rank, parse failure).
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside an operation's domain (not a root, not a face, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A build-time self-check failed; results computed past this point are meaningless.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A configured resource limit (face budget, vertex capacity) was exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A serialized artifact is malformed or does not match the system it is loaded for.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coxcat
